#ifndef RELAYNET_ERROR_HPP
#define RELAYNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace relaynet {

enum class Errc {
    NonPositiveParameter,
    TooFewRelays,
    ThresholdCountMismatch,
    ShapeMismatch,
    EmptyStateSpace,
    BudgetExceeded,
    InfeasibleResidual,
    BadFile,
};

class SimError : public std::runtime_error {
  public:
    SimError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace relaynet

#endif
