#pragma once

#include <vector>

#include "strata/finite_model.hpp"

namespace strata {

/// All preorders on {0..n-1}, n <= 5.
std::vector<Relation> all_preorders(std::size_t n);

/// One lattice per isomorphism class with exactly n elements (1 <= n <= 6).
std::vector<LatticeSpec> lattices_of_size(std::size_t n);
/// Lattices with 1..max_size elements, up to isomorphism.
std::vector<LatticeSpec> lattices_up_to(std::size_t max_size);

/// Every model (Ax1-Ax4) with at most `max_size` elements and 1..max_kappa
/// strata, one per isomorphism class. Sizes are limited to 4.
std::vector<FiniteModel> models_up_to(std::size_t max_size, Stratum max_kappa);

}  // namespace strata
