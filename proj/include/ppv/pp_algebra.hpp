#pragma once

#include <vector>

#include "ppv/module.hpp"
#include "ppv/quiver.hpp"

namespace ppv {

/// Graded basis of the preprojective algebra: paths in the double quiver
/// modulo the two-sided ideal generated by the preprojective relations.
///
/// Paths are written left to right: (a_1,...,a_d) with tgt(a_k) = src(a_{k+1});
/// on a module such a path acts as X_{a_d} ... X_{a_1}.
///
/// Each graded piece is computed directly in quotient coordinates: the
/// degree-d piece is spanned by (degree-(d-1) basis element) * (arrow),
/// modulo the rows coming from (degree-(d-2) basis element) * (relation).
/// This keeps every degree at quotient size, so non-finite-type inputs walk
/// to the degree cap cheaply instead of exploding in raw path space.
struct PathAlgebra {
    struct Degree {
        // spanning products (index into previous degree's basis, arrow);
        // degree 0 uses (v, -1) for the vertex idempotents
        std::vector<std::pair<int, int>> span;
        std::vector<std::pair<int, int>> ends;     // (src, tgt) per span element
        std::vector<int> basis;                    // span positions kept as basis
        // per span element: expansion in this degree's basis
        std::vector<std::vector<mpq_class>> expansion;
    };

    const DoubleQuiver* dq = nullptr;
    std::vector<Degree> degrees;  // last degree has an empty basis

    int total_dim() const;
    /// Dimension of the span of basis paths from i to j.
    int dim_between(int i, int j) const;
    std::pair<int, int> basis_ends(int degree, int k) const {
        return degrees[degree].ends[degrees[degree].basis[k]];
    }
    /// Expansion of (basis element k of degree d) * (arrow a) in the basis of
    /// degree d+1; all-zero when the product is not composable or reduces away.
    std::vector<mpq_class> right_mult(int d, int k, int a) const;
};

/// Build the graded basis degree by degree until the quotient vanishes.
/// Throws CapExceeded when the algebra fails to terminate within the caps
/// (the construction only stabilizes when the graph is of finite type).
PathAlgebra build_path_algebra(const DoubleQuiver& dq, int max_degree = 64,
                               long max_span = 1000000);

/// The indecomposable injective with socle at vertex i, realized on the dual
/// of the right projective at i. The arrow action is the transpose of right
/// multiplication by the mate arrow.
QModule injective_module(const PathAlgebra& alg, int i);

/// Direct sum of nu_i copies of each injective, in vertex order.
/// Throws NotDominant on negative multiplicities.
QModule injective_sum(const PathAlgebra& alg, const Weight& nu);

}  // namespace ppv
