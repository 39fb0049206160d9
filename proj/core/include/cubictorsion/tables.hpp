#pragma once

#include <map>
#include <set>
#include <vector>

#include <cubictorsion/torsion.hpp>

namespace ct {

// The classification tables: torsion structures over Q, over cubic fields,
// the possible cubic torsion for each rational torsion group, and the
// possible multisets of strictly larger groups across all growth fields of a
// single curve.

// Groups arising as E(Q)_tors (15 groups).
const std::set<TorsionStructure>& phi1();

// Groups arising as E(K)_tors for K cubic, E defined over Q (20 groups).
const std::set<TorsionStructure>& phi3();

// For each G in phi1, the set of groups H that can arise as E(K)_tors for a
// curve with E(Q)_tors = G (always contains G itself).
const std::map<TorsionStructure, std::set<TorsionStructure>>& phi3_of();

// For each G in phi1, the possible multisets {H_1, ..., H_k} of groups
// occurring across all cubic fields where the torsion grows, H_i != G;
// multisets are sorted vectors, and the empty multiset (no growth at all) is
// always possible and not listed.
const std::map<TorsionStructure, std::set<std::vector<TorsionStructure>>>&
h3_of();

bool in_phi1(const TorsionStructure& t);
bool in_phi3(const TorsionStructure& t);

// Internal consistency of the tables (key sets, closure properties).
// Returns true when every check passes.
bool tables_selfcheck();

}  // namespace ct
