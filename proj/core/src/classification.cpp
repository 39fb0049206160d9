#include <cubictorsion/classification.hpp>

#include <algorithm>
#include <atomic>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <cubictorsion/factor.hpp>

namespace ct {

namespace {

// Deterministic ordering of growth entries: |field disc| ascending, then the
// defining polynomial's coefficient vector lexicographically.
bool entry_less(const GrowthEntry& a, const GrowthEntry& b) {
    Int da = abs(a.field.field_disc()), db = abs(b.field.field_disc());
    if (da != db) return da < db;
    const auto& pa = a.field.defining_poly();
    const auto& pb = b.field.defining_poly();
    for (int i = 0; i <= 3; ++i) {
        if (pa[i] != pb[i]) return pa[i] < pb[i];
    }
    return false;
}

int order_valuation(const TorsionStructure& t, int p) {
    int v = 0;
    Int o(t.order());
    while (o % p == 0) {
        o /= p;
        ++v;
    }
    return v;
}

// The p-Sylow subgroup of Cm x Cn as a pair (p-part of m, p-part of n).
std::pair<int, int> sylow(const TorsionStructure& t, int p) {
    auto part = [&](int v) {
        int q = 1;
        while (v % p == 0) {
            v /= p;
            q *= p;
        }
        return q;
    };
    return {part(t.m), part(t.n)};
}

// Numerator and denominator of the duplication x-map on y^2 = x^3 + Ax + B:
// x([2]P) = (x^4 - 2Ax^2 - 8Bx + A^2) / (4(x^3 + Ax + B)).
std::pair<UniPoly, UniPoly> duplication_map(const Rat& A, const Rat& B) {
    UniPoly num({A * A, Rat(-8) * B, Rat(-2) * A, Rat(0), Rat(1)});
    UniPoly den({Rat(4) * B, Rat(4) * A, Rat(0), Rat(4)});
    return {num, den};
}

// True iff the root set of monic h is closed under doubling: the numerator of
// h(delta(x)) vanishes modulo h, where delta is the duplication x-map.
bool duplication_stable(const UniPoly& h, const Rat& A, const Rat& B) {
    auto [num, den] = duplication_map(A, B);
    int d = h.degree();
    // homogenize: sum_i h_i * num^i * den^(d-i), then reduce mod h
    UniPoly acc = UniPoly::zero();
    UniPoly numpow = UniPoly::constant(Rat(1));
    std::vector<UniPoly> denpow(d + 1);
    denpow[0] = UniPoly::constant(Rat(1));
    for (int i = 1; i <= d; ++i) denpow[i] = denpow[i - 1] * den;
    for (int i = 0; i <= d; ++i) {
        acc = acc + numpow * denpow[d - i] * h[i];
        numpow = numpow * num;
    }
    return UniPoly::divrem(acc, h).second.is_zero();
}

// All monic rational divisors of exact degree d assembled from the given
// irreducible factors (each used at most once), in a deterministic order.
std::vector<UniPoly> degree_d_products(const std::vector<UniPoly>& factors,
                                       int d) {
    std::vector<UniPoly> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int need) -> void {
        if (need == 0) {
            UniPoly h = UniPoly::constant(Rat(1));
            for (int i : pick) h = h * factors[i];
            out.push_back(h.monic());
            return;
        }
        for (size_t i = from; i < factors.size(); ++i) {
            if (factors[i].degree() > need) continue;
            pick.push_back(static_cast<int>(i));
            self(self, i + 1, need - factors[i].degree());
            pick.pop_back();
        }
    };
    rec(rec, 0, d);
    return out;
}

bool poly_lex_less(const UniPoly& a, const UniPoly& b) {
    return a.coeffs() < b.coeffs();
}

}  // namespace

GrowthRecord growth_fields(const Curve& E) {
    GrowthRecord rec;
    rec.label = E.label;
    rec.base = torsion_over_Q(E).structure;

    // candidate fields, deduplicated by isomorphism
    std::vector<CubicField> cands;
    auto add = [&](const UniPoly& cubic) {
        CubicField K = CubicField::from_cubic(cubic);
        for (const auto& seen : cands)
            if (is_isomorphic(seen, K)) return;
        cands.push_back(K);
    };
    UniPoly f = E.two_division_cubic();
    if (rational_roots(f).empty()) add(f);
    DivisionPolys D(E);
    for (int n : {4, 8, 3, 9, 7, 13}) {
        SmallFactors sf = small_factors(D.primitive(n), 3);
        for (const auto& fac : sf.factors)
            if (fac.degree() == 3) add(fac);
    }

    for (const auto& K : cands) {
        TorsionStructure H = torsion_over_K(E, K).structure;
        if (H != rec.base) rec.entries.push_back({K, H});
    }
    std::sort(rec.entries.begin(), rec.entries.end(), entry_less);

    if (!rec.entries.empty()) {
        std::vector<TorsionStructure> hs;
        for (const auto& e : rec.entries) hs.push_back(e.torsion);
        std::sort(hs.begin(), hs.end());
        const auto& table = h3_of();
        auto it = table.find(rec.base);
        if (it == table.end() || !it->second.count(hs)) {
            std::ostringstream os;
            os << "growth multiset not catalogued for base " << rec.base.str()
               << " on curve " << rec.label << ":";
            for (const auto& h : hs) os << " " << h.str();
            throw std::logic_error(os.str());
        }
    }
    return rec;
}

bool classify_growth_pair(const TorsionStructure& G,
                          const TorsionStructure& H) {
    if (!in_phi1(G))
        throw std::invalid_argument(
            "classify_growth_pair: G is not a rational torsion group");
    return phi3_of().at(G).count(H) != 0;
}

std::optional<UniPoly> rational_isogeny(const Curve& E, int n) {
    static const std::set<int> supported{2, 3, 5, 7, 9, 13};
    if (!supported.count(n))
        throw std::invalid_argument("rational_isogeny: unsupported degree");

    if (n == 2) {
        std::vector<Rat> roots = rational_roots(E.two_division_cubic());
        if (roots.empty()) return std::nullopt;
        return UniPoly({-roots.front(), Rat(1)});
    }

    int d = (n == 9) ? 3 : (n - 1) / 2;
    DivisionPolys D(E);
    const UniPoly& prim = D.primitive(n);

    std::vector<UniPoly> factors;
    if (n == 13) {
        // budgeted subset search: give up (nullopt) when the modular
        // factorization is too fine to recombine cheaply
        auto sf = bounded_degree_factors(prim, 6, 24);
        if (!sf) return std::nullopt;
        factors = sf->factors;
    } else {
        factors = small_factors(prim, d).factors;
    }
    std::sort(factors.begin(), factors.end(), poly_lex_less);

    std::optional<UniPoly> best;
    for (const UniPoly& h : degree_d_products(factors, d)) {
        if (!duplication_stable(h, E.A, E.B)) continue;
        if (!best || poly_lex_less(h, *best)) best = h;
    }
    return best;
}

bool two_independent_3_isogenies(const Curve& E) {
    DivisionPolys D(E);
    std::vector<Rat> roots = rational_roots(D.primitive(3));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots.size() >= 2;
}

DiscClass discriminant_class(const Curve& E) {
    if (is_square_rational(E.disc)) return DiscClass::Square;
    if (is_square_rational(-E.disc)) return DiscClass::MinusSquare;
    if (is_square_rational(-E.disc / 2)) return DiscClass::MinusTwoSquare;
    return DiscClass::Other;
}

Rat nine_isogeny_family_disc(const Rat& x, const Rat& u) {
    Rat c = x * x * x - 27;
    if (c == 0 || u == 0)
        throw std::invalid_argument(
            "nine_isogeny_family_disc: singular parameters");
    Rat u2 = u * u;
    Rat u12 = u2 * u2 * u2;
    u12 = u12 * u12;
    return Rat(4096 * 729) * c * u12;  // 2^12 * 3^6 * (x^3 - 27) * u^12
}

namespace {

void check_curve(const Curve& E, GrowthRecord& rec,
                 std::vector<DatasetViolation>& out) {
    auto flag = [&](const std::string& msg) {
        out.push_back({E.label, msg});
    };
    try {
        rec = growth_fields(E);
    } catch (const std::logic_error& e) {
        flag(e.what());
        rec.label = E.label;
        rec.base = torsion_over_Q(E).structure;
        rec.entries.clear();
        return;
    }
    const TorsionStructure& G = rec.base;

    if (rec.entries.size() > 3) flag("more than 3 growth fields");
    for (size_t i = 0; i < rec.entries.size(); ++i)
        for (size_t j = i + 1; j < rec.entries.size(); ++j)
            if (rec.entries[i].torsion == rec.entries[j].torsion)
                flag("two non-isomorphic growth fields with the same group " +
                     rec.entries[i].torsion.str());

    bool need3 = false, need9 = false;
    for (const auto& e : rec.entries) {
        const TorsionStructure& H = e.torsion;
        if (!classify_growth_pair(G, H))
            flag("inadmissible growth " + G.str() + " -> " + H.str());
        if (order_valuation(H, 3) >= 2) need9 = true;
        if (order_valuation(H, 3) > order_valuation(G, 3)) need3 = true;
        if (order_valuation(H, 5) != order_valuation(G, 5))
            flag("5-primary part grew in " + H.str());
        if (G.order() % 2 == 0 && sylow(H, 2) != sylow(G, 2))
            flag("2-Sylow grew from " + G.str() + " to " + H.str());
        if (H.m != 1) {
            if (H.m != 2 || H.n % 2 != 0)
                flag("non-cyclic growth not of the form C2 x C2m: " + H.str());
            else if (roots_in_field(E.two_division_cubic(), e.field).size() != 3)
                flag("non-cyclic growth " + H.str() +
                     " without split 2-division cubic");
        }
    }
    if (need9 && G.order() % 3 != 0)
        flag("order-9 growth without rational 3-torsion");
    if (need3 && !rational_isogeny(E, 3))
        flag("order-3 growth without a rational 3-isogeny");
    for (int p : {5, 7, 13}) {
        bool grown = false;
        for (const auto& e : rec.entries)
            if (e.torsion.order() % p == 0) grown = true;
        if (grown && !rational_isogeny(E, p))
            flag("order-" + std::to_string(p) + " growth without a rational " +
                 std::to_string(p) + "-isogeny");
    }
}

}  // namespace

DatasetReport verify_dataset(const std::vector<Curve>& curves, int jobs) {
    if (jobs < 1) jobs = 1;
    DatasetReport report;
    report.records.resize(curves.size());
    std::vector<std::vector<DatasetViolation>> viols(curves.size());

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= curves.size()) break;
            check_curve(curves[i], report.records[i], viols[i]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& v : viols)
        report.violations.insert(report.violations.end(), v.begin(), v.end());
    auto by_label = [](const auto& a, const auto& b) {
        return a.label < b.label;
    };
    std::stable_sort(report.records.begin(), report.records.end(), by_label);
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const DatasetViolation& a, const DatasetViolation& b) {
                         return std::tie(a.label, a.message) <
                                std::tie(b.label, b.message);
                     });
    return report;
}

}  // namespace ct
