#pragma once

#include <string>
#include <utility>
#include <vector>

#include <cubictorsion/rational.hpp>

namespace ct {

// The six auxiliary curves whose rational points the exclusion arguments
// need.  The expectation at any bound is that only the listed torsion points
// appear; any further point found is a falsification and must be reported.
enum class AuxCurve {
    YY_X3_minus_6X2_plus_13X,  // Y^2 = X^3 - 6X^2 + 13X        (only (0,0))
    YY_X3_plus_6X2_plus_13X,   // Y^2 = X^3 + 6X^2 + 13X        (only (0,0))
    YY_6X_sextic,              // Y^2 =  6X(1 - 6X^2 - 12X^3)   (only (0,0))
    YY_minus_6X_sextic,        // Y^2 = -6X(1 - 6X^2 - 12X^3)   (only (0,0))
    YY_X3_minus_27,            // Y^2 = X^3 - 27                (only (3,0))
    YY_X3_plus_27,             // Y^2 = X^3 + 27                (only (-3,0))
};

const std::vector<AuxCurve>& aux_curves();
std::string aux_curve_name(AuxCurve id);

// All affine rational points (X, Y) with X = a/b^2 in lowest terms,
// |a| <= height_bound and b^2 <= height_bound, found by exhaustive
// quadratic-residue-sieved search; Y is reported with Y >= 0 (each solution
// with Y != 0 stands for the pair (X, +-Y)).  height_bound must be >= 1.
std::vector<std::pair<Rat, Rat>> aux_curve_search(AuxCurve id,
                                                  long height_bound);

}  // namespace ct
