#pragma once

#include <stdexcept>
#include <string>

namespace hart {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define HART_ERROR(Name)                                                   \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name, what) {}     \
    };

HART_ERROR(Singular)
HART_ERROR(ParseError)
HART_ERROR(UnknownVertex)
HART_ERROR(NonParallelRelation)
HART_ERROR(NotAdmissible)
HART_ERROR(CapExceeded)
HART_ERROR(AboveCap)
HART_ERROR(PreconditionFailed)
HART_ERROR(StoppedEarly)
HART_ERROR(NotCofinite)
HART_ERROR(OmegaNotConstantOnB)
HART_ERROR(DimensionTooLarge)
HART_ERROR(NotBounding)
HART_ERROR(InvalidRestrictedCut)

#undef HART_ERROR

}  // namespace hart
