#ifndef RELAYNET_REFERENCE_HPP
#define RELAYNET_REFERENCE_HPP

#include "relaynet/dp.hpp"
#include "relaynet/trellis.hpp"

namespace relaynet {

// Plain serial implementations of the two kernels, written the obvious way
// with no short-circuiting, laziness or OpenMP. They are the ground truth
// the optimized kernels are tested against (results must match bit for bit)
// and the baseline the benchmark compares speed against.

BranchWeights build_branch_weights_reference(const ChannelRealization& realization,
                                             std::span<const StateSpace> spaces,
                                             const NetworkConfig& config);

DpResult dp_solve_reference(const BranchWeights& weights);

} // namespace relaynet

#endif
