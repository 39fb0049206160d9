#pragma once

#include <optional>
#include <string>
#include <vector>

#include <cubictorsion/elliptic.hpp>
#include <cubictorsion/numberfield.hpp>
#include <cubictorsion/polyq.hpp>
#include <cubictorsion/tables.hpp>
#include <cubictorsion/torsion.hpp>

namespace ct {

// One cubic field where the torsion of a fixed curve strictly grows.
struct GrowthEntry {
    CubicField field;
    TorsionStructure torsion;  // E(K)_tors
};

// The complete growth picture of one curve: base torsion G = E(Q)_tors and
// every cubic field (up to isomorphism) with E(K)_tors != G.  Entries are
// sorted by |field discriminant|, then by defining-polynomial coefficients.
struct GrowthRecord {
    std::string label;
    TorsionStructure base;
    std::vector<GrowthEntry> entries;
};

// Enumerates all cubic growth fields of E.  Candidate fields come from the
// 2-division cubic (when irreducible) and from the cubic irreducible factors
// of the primitive division polynomials for n in {4, 8, 3, 9, 7, 13}; each
// candidate is measured with torsion_over_K and kept on strict growth.
// Throws std::logic_error if the resulting multiset of groups is not among
// the catalogued possibilities for G (a falsification, surfaced loudly).
GrowthRecord growth_fields(const Curve& E);

// True iff H can occur as cubic-field torsion of a curve with rational
// torsion G.  Throws std::invalid_argument when G is not a rational torsion
// group.
bool classify_growth_pair(const TorsionStructure& G, const TorsionStructure& H);

// Monic rational kernel polynomial of a rational n-isogeny, or nullopt when
// no such isogeny exists (or, for n = 13, when the modular factor count
// exceeds the configured subset-search budget).  n must be one of
// {2, 3, 5, 7, 9, 13}; throws std::invalid_argument otherwise.  For odd
// n != 9 the polynomial has degree (n-1)/2 and its root set is closed under
// the duplication x-map; for n = 9 it has degree 3 and carries exactly the
// roots of exact order 9; for n = 2 it is x - x0 with x0 a rational
// 2-torsion x-coordinate.
std::optional<UniPoly> rational_isogeny(const Curve& E, int n);

// True iff psi_3 has two distinct rational roots (kernels of two independent
// 3-isogenies).
bool two_independent_3_isogenies(const Curve& E);

// The discriminant classes used by the exclusion arguments: Delta modulo
// rational squares equal to 1, -1 or -2, else Other.
enum class DiscClass { Square, MinusSquare, MinusTwoSquare, Other };
DiscClass discriminant_class(const Curve& E);

// Discriminant of the member of the 9-isogeny family at parameter x, twisted
// by u: 2^12 * 3^6 * (x^3 - 27) * u^12.  Throws std::invalid_argument when
// the parameters give a singular curve (x^3 = 27 or u = 0).
Rat nine_isogeny_family_disc(const Rat& x, const Rat& u);

// A single consistency failure found while sweeping a dataset.
struct DatasetViolation {
    std::string label;
    std::string message;
};

struct DatasetReport {
    std::vector<GrowthRecord> records;       // sorted by label
    std::vector<DatasetViolation> violations;  // sorted by label, then message
    bool ok() const { return violations.empty(); }
};

// Runs growth_fields over every curve and checks the catalogued constraints:
// every (G, H) pair is admissible; at most 3 growth fields; at most one field
// per group H; order-9 growth requires rational 3-torsion; order-3 growth
// requires a rational 3-isogeny; growth of order 5, 7 or 13 requires a
// rational isogeny of that degree; the 5-primary part never grows; the
// 2-Sylow part never grows when E(Q) has even order; non-cyclic growth is of
// the form C2 x C2m with the 2-division cubic split in the field.  Curves are
// processed in parallel with `jobs` threads; the report is merged
// deterministically.
DatasetReport verify_dataset(const std::vector<Curve>& curves, int jobs = 1);

}  // namespace ct
