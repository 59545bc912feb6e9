#pragma once

// Recorded regression constants for the flow-ledger complexity checks.
// These are artifacts of this implementation, measured on the reference
// instance families and then pinned; the test suites assert that ledger
// totals stay within them.
namespace vct::bounds {

// isolating_vertex_cuts: total instance edges ≤ c·m·(⌈log₂|I|⌉ + 1)
inline constexpr double isolating_ledger_c = 8.0;

// unbalanced: total instance edges ≤ c·m·β²·⌈log₂t⌉⁵
inline constexpr double unbalanced_ledger_c = 0.1;

// check_k_connectivity: total instance edges ≤ c·m·k²·⌈log₂n⌉^exponent
inline constexpr double checkk_ledger_c = 0.05;
inline constexpr int checkk_polylog_exponent = 5;

// approx_vertex_mincut: flow calls ≤ c·n/ε²
inline constexpr double approx_flow_calls_c = 24.0;

}  // namespace vct::bounds
