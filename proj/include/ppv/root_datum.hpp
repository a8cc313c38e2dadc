#pragma once

#include <gmpxx.h>

#include <vector>

#include "ppv/graph.hpp"

namespace ppv {

/// Classical Lie-theoretic quantities for finite (ADE) type.
/// These serve as independent oracles for the geometric engine; none of the
/// operator code paths depend on them.

/// All positive roots, by reflection closure. Throws NotFiniteType if the
/// closure does not terminate below the height bound.
std::vector<DimVector> positive_roots(const CartanMatrix& c, int height_bound = 1000);

/// Number of multisets of positive roots summing to beta (graded dimension
/// of U(n_-) and of any Verma module).
long kostant_count(const CartanMatrix& c, const DimVector& beta);

/// Weight multiplicity of lambda - beta in L(lambda), Freudenthal recursion
/// over exact rationals.
long freudenthal_mult(const CartanMatrix& c, const Weight& lambda, const DimVector& beta);

/// dim L(lambda), Weyl dimension formula.
long weyl_dim(const CartanMatrix& c, const Weight& lambda);

}  // namespace ppv
