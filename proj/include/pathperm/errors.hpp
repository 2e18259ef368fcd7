#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pathperm {

// Domain errors carry a stable name; the CLI prints it on stderr and exits 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define PATHPERM_DOMAIN_ERROR(Kind)                             \
  class Kind final : public DomainError {                       \
   public:                                                      \
    explicit Kind(const std::string& what = "")                 \
        : DomainError(#Kind, what) {}                           \
  }

PATHPERM_DOMAIN_ERROR(NonConvergence);
PATHPERM_DOMAIN_ERROR(DegenerateLeadingCoeff);
PATHPERM_DOMAIN_ERROR(InterpolationIllConditioned);
PATHPERM_DOMAIN_ERROR(SingularPoint);
PATHPERM_DOMAIN_ERROR(RadiusTooLarge);
PATHPERM_DOMAIN_ERROR(EndpointMismatch);
PATHPERM_DOMAIN_ERROR(NotClosed);
PATHPERM_DOMAIN_ERROR(BaseMismatch);
PATHPERM_DOMAIN_ERROR(BranchPointHit);
PATHPERM_DOMAIN_ERROR(StepFailure);
PATHPERM_DOMAIN_ERROR(SizeMismatch);
PATHPERM_DOMAIN_ERROR(SizeLimit);
PATHPERM_DOMAIN_ERROR(DivisionByZero);
PATHPERM_DOMAIN_ERROR(RadicandVanishes);
PATHPERM_DOMAIN_ERROR(BaseIsBranchPoint);
PATHPERM_DOMAIN_ERROR(UnknownVariable);
PATHPERM_DOMAIN_ERROR(AmbiguousBranches);

#undef PATHPERM_DOMAIN_ERROR

// Bad literals (family/path/formula/permutation text). The CLI treats these
// as usage errors (exit 2).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace pathperm
