#include <cubictorsion/tables.hpp>

#include <algorithm>

namespace ct {

namespace {

TorsionStructure C(int n) { return {1, n}; }
TorsionStructure C2x(int n) { return {2, n}; }

std::set<TorsionStructure> make_phi1() {
    std::set<TorsionStructure> s;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) s.insert(C(n));
    for (int m : {1, 2, 3, 4}) s.insert(C2x(2 * m));
    return s;
}

std::set<TorsionStructure> make_phi3() {
    std::set<TorsionStructure> s;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 14, 18, 21}) s.insert(C(n));
    for (int m : {1, 2, 3, 4, 7}) s.insert(C2x(2 * m));
    return s;
}

std::map<TorsionStructure, std::set<TorsionStructure>> make_phi3_of() {
    std::map<TorsionStructure, std::set<TorsionStructure>> m;
    m[C(1)] = {C(1), C(2), C(3), C(4), C(6), C(7), C(13), C2x(2), C2x(14)};
    m[C(2)] = {C(2), C(6), C(14)};
    m[C(3)] = {C(3), C(6), C(9), C(12), C(21), C2x(6)};
    m[C(4)] = {C(4), C(12)};
    m[C(5)] = {C(5), C(10)};
    m[C(6)] = {C(6), C(18)};
    m[C(7)] = {C(7), C(14)};
    m[C(8)] = {C(8)};
    m[C(9)] = {C(9), C(18)};
    m[C(10)] = {C(10)};
    m[C(12)] = {C(12)};
    m[C2x(2)] = {C2x(2), C2x(6)};
    m[C2x(4)] = {C2x(4)};
    m[C2x(6)] = {C2x(6)};
    m[C2x(8)] = {C2x(8)};
    return m;
}

std::map<TorsionStructure, std::set<std::vector<TorsionStructure>>> make_h3_of() {
    std::map<TorsionStructure, std::set<std::vector<TorsionStructure>>> m;
    m[C(1)] = {{C(2)}, {C(4)}, {C(6)}, {C2x(2)}, {C2x(14)},
               {C(2), C(3)}, {C(2), C(7)}, {C(2), C(13)},
               {C(3), C(4)}, {C(3), C2x(2)}, {C(4), C(7)}, {C(7), C2x(2)},
               {C(2), C(3), C(7)}};
    m[C(2)] = {{C(6)}, {C(14)}};
    m[C(3)] = {{C(6)}, {C(12)}, {C2x(6)}, {C(6), C(9)}, {C(6), C(21)}};
    m[C(4)] = {{C(12)}};
    m[C(5)] = {{C(10)}};
    m[C(6)] = {{C(18)}};
    m[C(7)] = {{C(14)}};
    m[C(9)] = {{C(18)}};
    m[C2x(2)] = {{C2x(6)}};
    return m;
}

}  // namespace

const std::set<TorsionStructure>& phi1() {
    static const auto t = make_phi1();
    return t;
}
const std::set<TorsionStructure>& phi3() {
    static const auto t = make_phi3();
    return t;
}
const std::map<TorsionStructure, std::set<TorsionStructure>>& phi3_of() {
    static const auto t = make_phi3_of();
    return t;
}
const std::map<TorsionStructure, std::set<std::vector<TorsionStructure>>>&
h3_of() {
    static const auto t = make_h3_of();
    return t;
}

bool in_phi1(const TorsionStructure& t) { return phi1().count(t) > 0; }
bool in_phi3(const TorsionStructure& t) { return phi3().count(t) > 0; }

bool tables_selfcheck() {
    // basic shape
    if (phi1().size() != 15 || phi3().size() != 20) return false;
    for (const auto& t : phi1())
        if (!in_phi3(t)) return false;
    // phi3_of keyed exactly by phi1; each value contains G and sits in phi3
    if (phi3_of().size() != phi1().size()) return false;
    for (const auto& [g, hs] : phi3_of()) {
        if (!in_phi1(g)) return false;
        if (!hs.count(g)) return false;
        for (const auto& h : hs) {
            if (!in_phi3(h)) return false;
            // a subgroup embedding G -> H requires m_G | m_H and n_G | n_H
            if (h.m % g.m != 0 || h.n % g.n != 0) return false;
        }
    }
    // h3_of: keys are the G with possible growth; every H in a multiset lies
    // in phi3_of(G) \ {G}; multisets sorted, nonempty, at most 3 entries
    for (const auto& [g, sets] : h3_of()) {
        auto it = phi3_of().find(g);
        if (it == phi3_of().end()) return false;
        if (it->second.size() < 2) return false;
        std::set<TorsionStructure> growth;
        for (const auto& s : sets) {
            if (s.empty() || s.size() > 3) return false;
            if (!std::is_sorted(s.begin(), s.end())) return false;
            for (const auto& h : s) {
                if (h == g || !it->second.count(h)) return false;
                growth.insert(h);
            }
        }
        // every possible growth group appears in some multiset
        for (const auto& h : it->second)
            if (h != g && !growth.count(h)) return false;
    }
    // conversely, every G with phi3_of(G) larger than {G} has multisets
    for (const auto& [g, hs] : phi3_of())
        if (hs.size() > 1 && !h3_of().count(g)) return false;
    return true;
}

}  // namespace ct
