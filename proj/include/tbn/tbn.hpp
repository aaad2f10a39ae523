#pragma once

// Umbrella header for the tbn library: exact divisor theory on metric
// graphs (reduced divisors, Baker-Norine ranks, Brill-Noether loci and
// ranks) with a finite-graph oracle.

#include "tbn/brill_noether.hpp"
#include "tbn/case_analysis.hpp"
#include "tbn/families.hpp"
#include "tbn/finite_oracle.hpp"
#include "tbn/generators.hpp"
#include "tbn/jacobian.hpp"
#include "tbn/pl_function.hpp"
#include "tbn/rank.hpp"
#include "tbn/reduction.hpp"

namespace tbn {
inline constexpr const char* kVersion = "0.1.0";
}
