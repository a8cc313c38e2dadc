#pragma once

// Deliberately slow, structurally independent reference implementations used
// only by the test suites. Nothing in src/ may include this header.

#include <cstdint>
#include <map>
#include <vector>

#include "ppv/catalog.hpp"
#include "ppv/graph.hpp"
#include "ppv/grassmann.hpp"
#include "ppv/quiver.hpp"

namespace ppv::oracle {

/// Multisets of positive roots summing to beta, by direct enumeration.
long kostant_by_enumeration(const CartanMatrix& c, const DimVector& beta);

/// Dimension of the preprojective algebra by brute force: enumerate every
/// path up to max_degree, span the relation ideal by all two-sided products
/// p * rho_v * q at once (no degree recursion), and count the quotient.
/// Returns -1 if paths of max_degree survive (not provably finished).
long algebra_dim_by_products(const DoubleQuiver& dq, int max_degree);

/// F_p point counts, per iso-class of the quotient-by-s_i submodule, of the
/// hyperplane variety behind grass_down — by enumerating every admissible
/// hyperplane functional as an explicit projective point.
std::map<int, long> down_counts_by_points(const Catalog& cat, int class_id, int i,
                                          std::uint32_t p);

/// F_p point counts, per iso-class of the enlarged submodule, of the line
/// variety behind grass_up — by embedding x into q_nu and enumerating every
/// line of the s_i-socle of the cokernel as an explicit projective point.
std::map<int, long> up_counts_by_points(const Catalog& cat,
                                        const std::vector<PModule>& injectives,
                                        int class_id, const Weight& nu, int i,
                                        std::uint32_t p);

/// Every arrow-stable tuple of subspaces of x with dimension vector gamma,
/// by exhaustive echelon-form enumeration. Throws TooLarge beyond total
/// dimension 6 or prime 5.
std::vector<std::vector<PMatrix>> brute_submodules(const PModule& x,
                                                   const DimVector& gamma,
                                                   std::uint32_t p);

/// Cross-checks one stratified variety three ways: exhaustive submodule
/// enumeration vs the projective-point parametrization at the small primes,
/// and the engine's interpolated chi values vs an independent interpolation
/// of point counts. nu empty means the quotient-by-s_i direction; otherwise
/// the extension direction inside q_nu. The exhaustive check is skipped when
/// the module is beyond the enumeration bound; the interpolation check always
/// runs. Returns false (after printing the difference) on any mismatch.
bool brute_grass_compare(GrassEngine& eng, int class_id, int i, const Weight& nu);

}  // namespace ppv::oracle
