#ifndef RELAYNET_EXEC_HPP
#define RELAYNET_EXEC_HPP

namespace relaynet {

// Execution policy for the data-parallel kernels. Serial and Parallel run
// the same arithmetic per element and produce bit-identical results.
enum class Exec { Serial, Parallel };

} // namespace relaynet

#endif
