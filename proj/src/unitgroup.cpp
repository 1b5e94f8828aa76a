#include "galmod/unitgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "galmod/errors.hpp"

namespace galmod {

UnitGroup::UnitGroup(long modulus) : m_(modulus) {
    if (modulus < 1) throw BadDescriptor("modulus must be positive");
    order_ = euler_phi(m_);

    // one or two cyclic generators per prime power, pushed through CRT
    for (auto [p, e] : factorize(m_)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long cof = m_ / pe;
        auto lift = [&](long g) {
            // g mod pe, 1 mod cofactor
            return cof == 1 ? g % m_ : crt_pair(g, pe, 1, cof);
        };
        if (p == 2) {
            if (e == 1) continue;  // (Z/2)^x trivial
            if (e == 2) {
                gens_.push_back(lift(3));
                orders_.push_back(2);
            } else {
                gens_.push_back(lift(pe - 1));  // -1
                orders_.push_back(2);
                gens_.push_back(lift(5));
                orders_.push_back(pe / 4);
            }
        } else {
            gens_.push_back(lift(primitive_root(pe)));
            orders_.push_back(euler_phi(pe));
        }
    }

    for (long a = 0; a < m_; ++a)
        if (std::gcd(a, m_) == 1) units_.push_back(m_ == 1 ? 0 : a);
    if (m_ == 1) units_ = {0};

    // dense dlog table by mixed-radix enumeration of exponent vectors
    std::vector<long> exps(gens_.size(), 0);
    long count = 1;
    for (long o : orders_) count *= o;
    long val = 1 % m_;
    for (long idx = 0; idx < count; ++idx) {
        dlog_table_.emplace(val, exps);
        // increment mixed radix, updating val by one generator multiplication
        for (size_t i = 0; i < exps.size(); ++i) {
            ++exps[i];
            val = mul_mod(val, gens_[i], m_);
            if (exps[i] < orders_[i]) break;
            // wrap: multiply to cancel the full cycle (val already wrapped
            // since gens_[i]^orders_[i] = 1)
            exps[i] = 0;
        }
    }
    if (static_cast<long>(dlog_table_.size()) != order_)
        throw BadDescriptor("unit group enumeration mismatch");
}

bool UnitGroup::is_unit(long a) const {
    return std::gcd(normalize(a), m_) == 1 || m_ == 1;
}

long UnitGroup::normalize(long a) const {
    long r = a % m_;
    if (r < 0) r += m_;
    return r;
}

std::vector<long> UnitGroup::dlog(long a) const {
    auto it = dlog_table_.find(normalize(a));
    if (it == dlog_table_.end())
        throw BadDescriptor("dlog of non-unit " + std::to_string(a) + " mod " +
                            std::to_string(m_));
    return it->second;
}

long UnitGroup::from_exponents(const std::vector<long>& e) const {
    if (e.size() != gens_.size()) throw BadDescriptor("exponent vector size mismatch");
    long v = 1 % m_;
    for (size_t i = 0; i < e.size(); ++i) {
        long x = ((e[i] % orders_[i]) + orders_[i]) % orders_[i];
        v = mul_mod(v, pow_mod(gens_[i], x, m_), m_);
    }
    return v;
}

std::vector<long> UnitGroup::subgroup_closure(std::vector<long> gens) const {
    std::set<long> acc{1 % m_};
    for (long g : gens) {
        if (!is_unit(g))
            throw BadSubgroup("generator " + std::to_string(g) +
                              " not coprime to modulus " + std::to_string(m_));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(acc.begin(), acc.end());
        for (long a : cur)
            for (long g : gens) {
                long v = mul_mod(a, normalize(g), m_);
                if (acc.insert(v).second) grew = true;
            }
    }
    return std::vector<long>(acc.begin(), acc.end());
}

}  // namespace galmod
