#pragma once

#include <stdexcept>
#include <string>

namespace nrt {

// Base class for all domain errors. `name()` is the stable identifier that
// surfaces verbatim on the CLI; `what()` carries the human-readable detail.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& msg)
        : std::runtime_error(msg.empty() ? name : name + ": " + msg),
          name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define NRT_DEFINE_ERROR(NAME)                                   \
    class NAME : public DomainError {                            \
    public:                                                      \
        explicit NAME(const std::string& msg = "")               \
            : DomainError(#NAME, msg) {}                         \
    }

NRT_DEFINE_ERROR(NonPrimeCharacteristic);
NRT_DEFINE_ERROR(ReducibleModulus);
NRT_DEFINE_ERROR(DegreeMismatch);
NRT_DEFINE_ERROR(DivisionByZero);
NRT_DEFINE_ERROR(MixedFields);
NRT_DEFINE_ERROR(SingularMatrix);
NRT_DEFINE_ERROR(VariableCountMismatch);
NRT_DEFINE_ERROR(DimensionMismatch);
NRT_DEFINE_ERROR(BudgetExceeded);
NRT_DEFINE_ERROR(OddAmbient);
NRT_DEFINE_ERROR(OddM);
NRT_DEFINE_ERROR(NotInvolution);
NRT_DEFINE_ERROR(RelationViolated);
NRT_DEFINE_ERROR(CapExceeded);
NRT_DEFINE_ERROR(ShapeMismatch);
NRT_DEFINE_ERROR(ParseError);

#undef NRT_DEFINE_ERROR

}  // namespace nrt
