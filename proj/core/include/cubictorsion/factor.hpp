#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubictorsion/polyq.hpp"

namespace ct {

struct FactorList {
  Rat unit{1};
  // (monic irreducible, multiplicity)
  std::vector<std::pair<UniPoly, int>> factors;
};

struct SmallFactors {
  // monic irreducible factors of degree <= dmax, each exactly once
  std::vector<UniPoly> factors;
  // monic product of the remaining factors (degree > dmax)
  UniPoly cofactor;
};

// All monic irreducible factors of degree <= dmax (1 <= dmax <= 3) of a
// squarefree p, plus the cofactor. Zassenhaus-style: factor mod a good prime,
// Hensel-lift past a Mignotte-type bound, recombine subsets of total degree
// <= dmax in ascending order.
SmallFactors small_factors(const UniPoly& p, int dmax);

// Same engine with dmax up to 6 (used for degree-6 isogeny kernels). Returns
// nullopt ("undetermined") when the modular factor count exceeds max_modular.
std::optional<SmallFactors> bounded_degree_factors(const UniPoly& p, int dmax,
                                                   int max_modular = 24);

// All rational roots of p with multiplicity.
std::vector<Rat> rational_roots(const UniPoly& p);

}  // namespace ct
