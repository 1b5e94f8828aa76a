#pragma once

#include <stdexcept>
#include <string>

namespace galmod {

// Error taxonomy shared by all modules.  Each condition that callers may
// want to catch separately gets its own type; everything derives from
// Error so the CLI can map any domain failure to a structured report entry.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define GALMOD_DEFINE_ERROR(Name)                         \
    class Name : public Error {                          \
    public:                                              \
        explicit Name(const std::string& what)           \
            : Error(#Name, what) {}                      \
    }

GALMOD_DEFINE_ERROR(NonInvertible);
GALMOD_DEFINE_ERROR(InvalidGaloisIndex);
GALMOD_DEFINE_ERROR(ZeroValuation);
GALMOD_DEFINE_ERROR(SizeLimit);
GALMOD_DEFINE_ERROR(GroupMismatch);
GALMOD_DEFINE_ERROR(BadSubgroup);
GALMOD_DEFINE_ERROR(WildRamification);
GALMOD_DEFINE_ERROR(NotPrimitive);
GALMOD_DEFINE_ERROR(BadTrace);
GALMOD_DEFINE_ERROR(BadTable);
GALMOD_DEFINE_ERROR(NonIntegralExponent);
GALMOD_DEFINE_ERROR(Singular);
GALMOD_DEFINE_ERROR(ChtViolation);
GALMOD_DEFINE_ERROR(BadDescriptor);

#undef GALMOD_DEFINE_ERROR

}  // namespace galmod
