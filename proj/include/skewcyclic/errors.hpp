#ifndef SKEWCYCLIC_ERRORS_HPP
#define SKEWCYCLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewcyclic {

// Base of all typed errors.  The name() is the stable identifier used by the
// CLI when reporting errors as JSON; the what() string carries detail.
class Error : public std::runtime_error {
  public:
    Error(std::string name, const std::string& msg)
        : std::runtime_error(msg.empty() ? name : name + ": " + msg), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

  private:
    std::string name_;
};

#define SKEWCYCLIC_DEFINE_ERROR(NAME)                                                             \
    class NAME : public Error {                                                                   \
      public:                                                                                     \
        explicit NAME(const std::string& msg = "") : Error(#NAME, msg) {}                         \
    };

SKEWCYCLIC_DEFINE_ERROR(NotPrime)
SKEWCYCLIC_DEFINE_ERROR(ReducibleModulus)
SKEWCYCLIC_DEFINE_ERROR(DegreeMismatch)
SKEWCYCLIC_DEFINE_ERROR(DivisionByZero)
SKEWCYCLIC_DEFINE_ERROR(InvalidParameters)
SKEWCYCLIC_DEFINE_ERROR(CharDividesN)
SKEWCYCLIC_DEFINE_ERROR(DegreeOutOfRange)
SKEWCYCLIC_DEFINE_ERROR(NotAUnit)
SKEWCYCLIC_DEFINE_ERROR(NotAnAutomorphism)
SKEWCYCLIC_DEFINE_ERROR(ContextMismatch)
SKEWCYCLIC_DEFINE_ERROR(ZeroPolynomial)
SKEWCYCLIC_DEFINE_ERROR(EmptyInput)
SKEWCYCLIC_DEFINE_ERROR(DimensionMismatch)
SKEWCYCLIC_DEFINE_ERROR(LengthMismatch)
SKEWCYCLIC_DEFINE_ERROR(NotFullRowRank)
SKEWCYCLIC_DEFINE_ERROR(NotPrincipal)
SKEWCYCLIC_DEFINE_ERROR(NotDelayFree)
SKEWCYCLIC_DEFINE_ERROR(NotACode)
SKEWCYCLIC_DEFINE_ERROR(NotReduced)
SKEWCYCLIC_DEFINE_ERROR(InternalNotPrincipal)
SKEWCYCLIC_DEFINE_ERROR(StateSpaceTooLarge)
SKEWCYCLIC_DEFINE_ERROR(ParseError)
SKEWCYCLIC_DEFINE_ERROR(UsageError)

#undef SKEWCYCLIC_DEFINE_ERROR

} // namespace skewcyclic

#endif
