#include "galmod/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <memory>
#include <mutex>

#include "galmod/errors.hpp"
#include "galmod/numtheory.hpp"
#include "galmod/polyz.hpp"

namespace galmod {

namespace {

std::mutex g_ctx_mutex;
std::map<long, std::unique_ptr<CycloContext>>& context_registry() {
    static std::map<long, std::unique_ptr<CycloContext>> reg;
    return reg;
}

std::map<long, std::vector<Integer>>& phi_registry() {
    static std::map<long, std::vector<Integer>> reg;
    return reg;
}

// Phi_N by exact division: (x^N - 1) / prod_{d | N, d < N} Phi_d.
// Caller must hold g_ctx_mutex.
const std::vector<Integer>& cyclotomic_locked(long N) {
    auto& reg = phi_registry();
    auto it = reg.find(N);
    if (it != reg.end()) return it->second;

    std::vector<Integer> num(N + 1);
    num[0] = -1;
    num[N] = 1;
    for (long d : divisors(N)) {
        if (d == N) continue;
        num = polyz_divexact(num, cyclotomic_locked(d));
    }
    return reg.emplace(N, std::move(num)).first->second;
}

bool all_integral(const std::vector<Rational>& v) {
    for (const auto& q : v)
        if (q.get_den() != 1) return false;
    return true;
}

std::unique_ptr<CycloContext> build_context(long N, const std::vector<Integer>& phiN) {
    auto ctx = std::make_unique<CycloContext>();
    ctx->level = N;
    ctx->phi = static_cast<long>(phiN.size()) - 1;
    ctx->cyclotomic = phiN;

    long phi = ctx->phi;
    ctx->power_basis.resize(N);
    std::vector<Integer> cur(phi);
    cur[0] = 1;
    ctx->power_basis[0] = cur;
    for (long k = 1; k < N; ++k) {
        // multiply by x and reduce once; x^phi = -(Phi - x^phi)
        Integer lead = cur[phi - 1];
        for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (lead != 0)
            for (long i = 0; i < phi; ++i) cur[i] -= lead * phiN[i];
        ctx->power_basis[k] = cur;
    }
    return ctx;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(long N) {
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    return cyclotomic_locked(N);
}

const CycloContext& cyclo_context(long level) {
    if (level < 1) throw BadDescriptor("cyclotomic level must be positive");
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto& reg = context_registry();
    auto it = reg.find(level);
    if (it == reg.end()) {
        it = reg.emplace(level, build_context(level, cyclotomic_locked(level))).first;
    }
    return *it->second;
}

CycloNumber::CycloNumber(const Rational& q) : level_(1), coeffs_(1) {
    coeffs_[0] = q;
}

CycloNumber::CycloNumber(long level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    const CycloContext& ctx = cyclo_context(level);
    if (static_cast<long>(coeffs_.size()) != ctx.phi)
        throw BadDescriptor("coefficient vector length must equal phi(level)");
}

CycloNumber CycloNumber::root_of_unity(long level, long k) {
    const CycloContext& ctx = cyclo_context(level);
    k %= level;
    if (k < 0) k += level;
    std::vector<Rational> c(ctx.phi);
    for (long i = 0; i < ctx.phi; ++i) c[i] = Rational(ctx.power_basis[k][i]);
    return CycloNumber(level, std::move(c));
}

bool CycloNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q == 0; });
}

bool CycloNumber::is_rational() const {
    // the power-basis representation is unique, so rational values are
    // exactly those supported on the constant coordinate
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw BadDescriptor("value is not rational");
    return coeffs_[0];
}

CycloNumber CycloNumber::at_level(long M) const {
    if (M == level_) return *this;
    if (M % level_ == 0) {
        // lift: zeta_level -> zeta_M^{M/level}
        const CycloContext& ctx = cyclo_context(M);
        long step = M / level_;
        if (all_integral(coeffs_)) {
            std::vector<Integer> acc(ctx.phi);
            for (size_t k = 0; k < coeffs_.size(); ++k) {
                const Integer& c = coeffs_[k].get_num();
                if (c == 0) continue;
                const auto& row = ctx.power_basis[static_cast<long>(k) * step];
                for (long i = 0; i < ctx.phi; ++i)
                    if (row[i] != 0) acc[i] += c * row[i];
            }
            std::vector<Rational> out(ctx.phi);
            for (long i = 0; i < ctx.phi; ++i) out[i] = Rational(acc[i]);
            return CycloNumber(M, std::move(out));
        }
        std::vector<Rational> out(ctx.phi);
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            const auto& row = ctx.power_basis[static_cast<long>(k) * step];
            for (long i = 0; i < ctx.phi; ++i)
                if (row[i] != 0) out[i] += coeffs_[k] * Rational(row[i]);
        }
        return CycloNumber(M, std::move(out));
    }
    if (level_ % M == 0) {
        // descend: solve a = sum_i y_i * lift(zeta_M^i) exactly
        const CycloContext& big = cyclo_context(level_);
        const CycloContext& small = cyclo_context(M);
        long step = level_ / M;
        long rows = big.phi, cols = small.phi;
        // augmented system [B | a]
        std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
        for (long j = 0; j < cols; ++j) {
            const auto& row = big.power_basis[j * step];
            for (long i = 0; i < rows; ++i) aug[i][j] = Rational(row[i]);
        }
        for (long i = 0; i < rows; ++i) aug[i][cols] = coeffs_[i];

        std::vector<long> pivot_col_of_row;
        long rank = 0;
        for (long j = 0; j < cols && rank < rows; ++j) {
            long p = rank;
            while (p < rows && aug[p][j] == 0) ++p;
            if (p == rows) continue;
            std::swap(aug[rank], aug[p]);
            Rational inv = 1 / aug[rank][j];
            for (long t = j; t <= cols; ++t) aug[rank][t] *= inv;
            for (long i = 0; i < rows; ++i) {
                if (i == rank || aug[i][j] == 0) continue;
                Rational f = aug[i][j];
                for (long t = j; t <= cols; ++t) aug[i][t] -= f * aug[rank][t];
            }
            pivot_col_of_row.push_back(j);
            ++rank;
        }
        for (long i = rank; i < rows; ++i)
            if (aug[i][cols] != 0)
                throw BadDescriptor("element does not lie in the requested subfield");
        std::vector<Rational> y(cols);
        for (long r = 0; r < rank; ++r) y[pivot_col_of_row[r]] = aug[r][cols];
        return CycloNumber(M, std::move(y));
    }
    // route through the lcm
    long L = lcm_ll(level_, M);
    return at_level(L).at_level(M);
}

long CycloNumber::min_level() const {
    for (long d : divisors(level_)) {
        if (d == level_) return level_;
        // screen with a few Galois elements fixing Q(zeta_d); the exact
        // solve below is what decides membership
        bool maybe = true;
        int sampled = 0;
        for (long k = 1 + d; k < level_ && sampled < 16 && maybe; k += d) {
            if (std::gcd(k, level_) != 1) continue;
            ++sampled;
            if (galois_apply(k) != *this) maybe = false;
        }
        if (!maybe) continue;
        try {
            (void)at_level(d);
            return d;
        } catch (const BadDescriptor&) {
        }
    }
    return level_;
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    long L = lcm_ll(a.level_, b.level_);
    CycloNumber x = a.at_level(L), y = b.at_level(L);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    return a + (-b);
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycloNumber CycloNumber::scaled(const Rational& q) const {
    CycloNumber r(*this);
    for (auto& c : r.coeffs_) c *= q;
    return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    long L = lcm_ll(a.level_, b.level_);
    CycloNumber x = a.at_level(L), y = b.at_level(L);
    const CycloContext& ctx = cyclo_context(L);
    long phi = ctx.phi;

    if (all_integral(x.coeffs_) && all_integral(y.coeffs_)) {
        std::vector<Integer> conv(2 * phi - 1);
        for (long i = 0; i < phi; ++i) {
            const Integer& xi = x.coeffs_[i].get_num();
            if (xi == 0) continue;
            for (long j = 0; j < phi; ++j) {
                const Integer& yj = y.coeffs_[j].get_num();
                if (yj != 0) conv[i + j] += xi * yj;
            }
        }
        std::vector<Integer> acc(phi);
        for (long k = 0; k < phi; ++k) acc[k] = conv[k];
        for (long k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = ctx.power_basis[k % L];
            for (long i = 0; i < phi; ++i)
                if (row[i] != 0) acc[i] += conv[k] * row[i];
        }
        std::vector<Rational> out(phi);
        for (long i = 0; i < phi; ++i) out[i] = Rational(acc[i]);
        return CycloNumber(L, std::move(out));
    }

    std::vector<Rational> conv(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (y.coeffs_[j] == 0) continue;
            conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    std::vector<Rational> out(phi);
    for (long k = 0; k < phi; ++k) out[k] = conv[k];
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& row = ctx.power_basis[k % L];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) out[i] += conv[k] * Rational(row[i]);
    }
    return CycloNumber(L, std::move(out));
}

CycloNumber CycloNumber::mul_zeta(long e) const {
    const CycloContext& ctx = cyclo_context(level_);
    e %= level_;
    if (e < 0) e += level_;
    if (e == 0) return *this;
    if (all_integral(coeffs_)) {
        std::vector<Integer> acc(ctx.phi);
        for (size_t j = 0; j < coeffs_.size(); ++j) {
            const Integer& c = coeffs_[j].get_num();
            if (c == 0) continue;
            const auto& row = ctx.power_basis[(static_cast<long>(j) + e) % level_];
            for (long i = 0; i < ctx.phi; ++i)
                if (row[i] != 0) acc[i] += c * row[i];
        }
        std::vector<Rational> out(ctx.phi);
        for (long i = 0; i < ctx.phi; ++i) out[i] = Rational(acc[i]);
        return CycloNumber(level_, std::move(out));
    }
    std::vector<Rational> out(ctx.phi);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& row = ctx.power_basis[(static_cast<long>(j) + e) % level_];
        for (long i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) out[i] += coeffs_[j] * Rational(row[i]);
    }
    return CycloNumber(level_, std::move(out));
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw NonInvertible("inverse of zero");
    const CycloContext& ctx = cyclo_context(level_);
    long phi = ctx.phi;
    if (phi == 1) {
        std::vector<Rational> c{1 / coeffs_[0]};
        return CycloNumber(level_, std::move(c));
    }
    // extended Euclid in Q[x]: u * a + v * Phi_N = 1, inverse = u mod Phi_N
    std::vector<Rational> r0(ctx.cyclotomic.size()), r1(coeffs_);
    for (size_t i = 0; i < ctx.cyclotomic.size(); ++i) r0[i] = Rational(ctx.cyclotomic[i]);
    polyq_trim(r1);
    std::vector<Rational> s0{}, s1{Rational(1)};  // coefficients of a

    while (!r1.empty()) {
        auto [q, rem] = polyq_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        auto s2 = polyq_sub(s0, polyq_mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a nonzero constant since Phi_N is irreducible and a != 0)
    if (r0.size() != 1)
        throw NonInvertible("unexpected gcd degree in cyclotomic inverse");
    Rational scale = 1 / r0[0];
    std::vector<Rational> inv(phi);
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(phi); ++i)
        inv[i] = s0[i] * scale;
    return CycloNumber(level_, std::move(inv));
}

CycloNumber CycloNumber::conjugate() const {
    if (level_ <= 2) return *this;
    return galois_apply(level_ - 1);
}

CycloNumber CycloNumber::galois_apply(long k) const {
    k %= level_;
    if (k < 0) k += level_;
    if (std::gcd(k, level_) != 1)
        throw InvalidGaloisIndex("galois index " + std::to_string(k) +
                                 " not coprime to level " + std::to_string(level_));
    if (k == 1 % level_ || level_ == 1) return *this;
    const CycloContext& ctx = cyclo_context(level_);
    if (all_integral(coeffs_)) {
        std::vector<Integer> acc(ctx.phi);
        for (size_t j = 0; j < coeffs_.size(); ++j) {
            const Integer& c = coeffs_[j].get_num();
            if (c == 0) continue;
            const auto& row = ctx.power_basis[(static_cast<long>(j) * k) % level_];
            for (long i = 0; i < ctx.phi; ++i)
                if (row[i] != 0) acc[i] += c * row[i];
        }
        std::vector<Rational> out(ctx.phi);
        for (long i = 0; i < ctx.phi; ++i) out[i] = Rational(acc[i]);
        return CycloNumber(level_, std::move(out));
    }
    std::vector<Rational> out(ctx.phi);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        const auto& row = ctx.power_basis[(static_cast<long>(j) * k) % level_];
        for (long i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) out[i] += coeffs_[j] * Rational(row[i]);
    }
    return CycloNumber(level_, std::move(out));
}

bool CycloNumber::operator==(const CycloNumber& b) const {
    if (level_ == b.level_) return coeffs_ == b.coeffs_;
    long L = lcm_ll(level_, b.level_);
    return at_level(L).coeffs_ == b.at_level(L).coeffs_;
}

ComplexApprox CycloNumber::embed(long j, long precision_bits) const {
    long jm = ((j % level_) + level_) % level_;
    if (std::gcd(jm, level_) != 1)
        throw InvalidGaloisIndex("embedding index not coprime to level");
    long bits = precision_bits + 16;
    BigFloat two_pi = BigFloat::of(2L, bits) * BigFloat::pi(bits);
    BigFloat re(bits), im(bits);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        BigFloat c = BigFloat::of(coeffs_[k], bits);
        long e = (jm * static_cast<long>(k)) % level_;
        BigFloat ang = two_pi * BigFloat::of(e, bits) / BigFloat::of(level_, bits);
        re = re + c * cos(ang);
        im = im + c * sin(ang);
    }
    ComplexApprox out(precision_bits);
    out.re = re;
    out.im = im;
    out.precision_bits = precision_bits;
    return out;
}

std::pair<std::vector<Integer>, Integer> CycloNumber::integer_form() const {
    Integer den = 1;
    for (const auto& c : coeffs_) den = lcm(den, c.get_den());
    std::vector<Integer> num(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        num[i] = c_num_scaled(coeffs_[i], den);
    return {std::move(num), std::move(den)};
}

Rational cyclo_norm(const CycloNumber& a) {
    if (a.is_zero()) return Rational(0);
    const CycloContext& ctx = cyclo_context(a.level());
    auto [num, den] = a.integer_form();
    polyz_trim(num);
    Integer res = polyz_resultant(ctx.cyclotomic, num);
    Rational n(res);
    Rational d(den);
    // norm(a) = Res(Phi, num) / den^phi
    Rational dp(1);
    for (long i = 0; i < ctx.phi; ++i) dp *= d;
    Rational out = n / dp;
    out.canonicalize();
    return out;
}

}  // namespace galmod
