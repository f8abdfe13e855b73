#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base for all structured failures; `code` is stable for CLI/JSON output.
class HeckeError : public std::runtime_error {
public:
    HeckeError(std::string code, const std::string &msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code))
    {
    }
    const std::string &code() const { return code_; }

private:
    std::string code_;
};

#define HECKE_ERROR_TYPE(Name)                                            \
    class Name : public HeckeError {                                      \
    public:                                                               \
        explicit Name(const std::string &msg) : HeckeError(#Name, msg) {} \
    }

HECKE_ERROR_TYPE(BoundExceeded);
HECKE_ERROR_TYPE(NotInSpan);
HECKE_ERROR_TYPE(LeviNotStandard);
HECKE_ERROR_TYPE(InternalDivisionFailure);
HECKE_ERROR_TYPE(FieldTooSmall);
HECKE_ERROR_TYPE(StabilizerMismatch);
HECKE_ERROR_TYPE(NonIrreducible);
HECKE_ERROR_TYPE(IrrationalWeights);
HECKE_ERROR_TYPE(IrrationalSpectrum);
HECKE_ERROR_TYPE(NotNilpotent);
HECKE_ERROR_TYPE(NotCompatible);
HECKE_ERROR_TYPE(Unstable);
HECKE_ERROR_TYPE(PositivityFailure);
HECKE_ERROR_TYPE(InvalidInput);

#undef HECKE_ERROR_TYPE

} // namespace hecke
