#include <cubictorsion/auxsearch.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ct {

namespace {

using i64 = long long;
using i128 = __int128;

// f(X) = sum coeff[i] X^i, degree <= 4
struct AuxModel {
    AuxCurve id;
    std::array<i64, 5> coeff;
    const char* name;
};

const std::array<AuxModel, 6>& models() {
    static const std::array<AuxModel, 6> m = {{
        {AuxCurve::YY_X3_minus_6X2_plus_13X, {0, 13, -6, 1, 0}, "Y^2 = X^3 - 6X^2 + 13X"},
        {AuxCurve::YY_X3_plus_6X2_plus_13X, {0, 13, 6, 1, 0}, "Y^2 = X^3 + 6X^2 + 13X"},
        {AuxCurve::YY_6X_sextic, {0, 6, 0, -36, -72}, "Y^2 = 6X(1 - 6X^2 - 12X^3)"},
        {AuxCurve::YY_minus_6X_sextic, {0, -6, 0, 36, 72}, "Y^2 = -6X(1 - 6X^2 - 12X^3)"},
        {AuxCurve::YY_X3_minus_27, {-27, 0, 0, 1, 0}, "Y^2 = X^3 - 27"},
        {AuxCurve::YY_X3_plus_27, {27, 0, 0, 1, 0}, "Y^2 = X^3 + 27"},
    }};
    return m;
}

const AuxModel& model_of(AuxCurve id) {
    for (const auto& m : models())
        if (m.id == id) return m;
    throw std::invalid_argument("aux_curve_search: unknown curve id");
}

// With X = a/b^2 in lowest terms, Y^2 = f(X) has a rational solution iff
// N(a, b) = f(a/b^2) * b^8 is a perfect square; then Y = sqrt(N) / b^4.
i128 eval_n(const std::array<i64, 5>& c, i64 a, i64 b) {
    i128 b2 = static_cast<i128>(b) * b;
    i128 acc = 0;
    i128 apow = 1;
    // b^(8-2i) accumulated from the top: start at b^8 and divide via powers
    std::array<i128, 5> bpow;  // bpow[i] = b^(8-2i)
    bpow[4] = 1;
    for (int i = 3; i >= 0; --i) bpow[i] = bpow[i + 1] * b2;
    for (int i = 0; i <= 4; ++i) {
        acc += static_cast<i128>(c[i]) * apow * bpow[i];
        apow *= a;
    }
    return acc;
}

// floor sqrt for nonnegative i128 via long double seed + correction
i128 isqrt128(i128 n) {
    if (n < 0) return -1;
    long double d = sqrtl(static_cast<long double>(n));
    i128 r = static_cast<i128>(d);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// quadratic-residue acceptance table for one modulus
std::vector<uint8_t> square_table(int m) {
    std::vector<uint8_t> t(m, 0);
    for (int r = 0; r < m; ++r) t[static_cast<i64>(r) * r % m] = 1;
    return t;
}

// allowed residues of a mod m for fixed b: N(a, b) mod m must be a square;
// N is a quartic in a, so the table is filled with forward differences
// (4 modular additions per entry)
std::vector<uint8_t> allowed_table(const std::array<i64, 5>& c, i64 b, int m,
                                   const std::vector<uint8_t>& sq) {
    std::vector<uint8_t> ok(m);
    i64 b2 = b % m * (b % m) % m;
    std::array<i64, 5> bpow;
    bpow[4] = 1;
    for (int i = 3; i >= 0; --i) bpow[i] = bpow[i + 1] * b2 % m;
    // N(r, b) mod m at r = 0..4, then the forward-difference pyramid
    std::array<i64, 5> v{};
    for (int r = 0; r <= 4; ++r) {
        i64 acc = 0, apow = 1;
        for (int i = 0; i <= 4; ++i) {
            acc = (acc + (c[i] % m + m) % m * apow % m * bpow[i]) % m;
            apow = apow * r % m;
        }
        v[r] = acc;
    }
    std::array<i64, 5> d = v;
    for (int k = 1; k <= 4; ++k)
        for (int j = 4; j >= k; --j) d[j] = (d[j] - d[j - 1] + m) % m;
    for (int r = 0; r < m; ++r) {
        ok[r] = sq[d[0]];
        for (int k = 0; k < 4; ++k) {
            d[k] += d[k + 1];
            if (d[k] >= m) d[k] -= m;
        }
    }
    return ok;
}

struct Hit {
    i64 a, b;
    i128 y;  // sqrt of N(a, b)
};

inline int imod(i64 x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// Conservative a-intervals (clipped to [-H, H], padded) containing every a
// with f(a/b^2) >= 0; negative values are re-checked exactly at evaluation,
// so padding is harmless.  Derived from the sign structure of each model:
// the two X^3 + ..X^2 + 13X cubics and +-6X(1 - 6X^2 - 12X^3) change sign at
// X = 0 and (for the quartics) near X ~ 0.2698, the Mordell curves at -+3.
std::vector<std::pair<i64, i64>> feasible_intervals(AuxCurve id, i64 b,
                                                    i64 H) {
    i64 b2 = b * b;
    i64 r = static_cast<i64>(0.26976 * static_cast<double>(b2));  // quartic root
    std::vector<std::pair<i64, i64>> iv;
    switch (id) {
        case AuxCurve::YY_X3_minus_6X2_plus_13X:
        case AuxCurve::YY_X3_plus_6X2_plus_13X:
            iv = {{0, H}};
            break;
        case AuxCurve::YY_6X_sextic:
            iv = {{0, r + 4}};
            break;
        case AuxCurve::YY_minus_6X_sextic:
            iv = {{-H, 0}, {r - 4, H}};
            break;
        case AuxCurve::YY_X3_minus_27:
            iv = {{3 * b2 - 4, H}};
            break;
        case AuxCurve::YY_X3_plus_27:
            iv = {{-3 * b2 - 4, H}};
            break;
    }
    std::vector<std::pair<i64, i64>> out;
    for (auto [lo, hi] : iv) {
        lo = std::max(lo, -H);
        hi = std::min(hi, H);
        if (lo > hi) continue;
        if (!out.empty() && lo <= out.back().second + 1)
            out.back().second = std::max(out.back().second, hi);
        else
            out.push_back({lo, hi});
    }
    return out;
}

void search_one_b(const AuxModel& m, i64 H, i64 b, std::vector<Hit>& hits) {
    static const int M1 = 4032;  // 2^6 * 3^2 * 7
    static const int M2 = 65;    // 5 * 13
    static const int M3 = 3553;  // 11 * 17 * 19
    static const std::vector<uint8_t> sq1 = square_table(M1);
    static const std::vector<uint8_t> sq2 = square_table(M2);
    static const std::vector<uint8_t> sq3 = square_table(M3);

    const auto& c = m.coeff;
    auto ok1 = allowed_table(c, b, M1, sq1);
    auto ok2 = allowed_table(c, b, M2, sq2);
    auto ok3 = allowed_table(c, b, M3, sq3);
    std::vector<int> pass1;
    for (int r = 0; r < M1; ++r)
        if (ok1[r]) pass1.push_back(r);

    const int s2 = M1 % M2, s3 = M1 % M3;
    for (auto [lo, hi] : feasible_intervals(m.id, b, H)) {
        for (int r : pass1) {
            i64 a0 = lo + imod(static_cast<i64>(r) - lo, M1);
            if (a0 > hi) continue;
            int i2 = imod(a0, M2), i3 = imod(a0, M3);
            for (i64 a = a0; a <= hi; a += M1) {
                if (ok2[i2] && ok3[i3] && std::gcd(a, b) == 1) {
                    i128 n = eval_n(c, a, b);
                    if (n >= 0) {
                        i128 y = isqrt128(n);
                        if (y * y == n) hits.push_back({a, b, y});
                    }
                }
                i2 += s2;
                if (i2 >= M2) i2 -= M2;
                i3 += s3;
                if (i3 >= M3) i3 -= M3;
            }
        }
    }
}

}  // namespace

const std::vector<AuxCurve>& aux_curves() {
    static const std::vector<AuxCurve> ids = [] {
        std::vector<AuxCurve> v;
        for (const auto& m : models()) v.push_back(m.id);
        return v;
    }();
    return ids;
}

std::string aux_curve_name(AuxCurve id) { return model_of(id).name; }

std::vector<std::pair<Rat, Rat>> aux_curve_search(AuxCurve id,
                                                  long height_bound) {
    if (height_bound < 1)
        throw std::invalid_argument("aux_curve_search: height_bound must be >= 1");
    const AuxModel& m = model_of(id);
    i64 H = height_bound;
    i64 bmax = 1;
    while ((bmax + 1) * (bmax + 1) <= H) ++bmax;

    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(bmax));
    std::vector<std::vector<Hit>> parts(jobs);
    std::vector<std::thread> pool;
    // interleave b across workers: small b dominates the per-b cost equally,
    // so a strided split balances well
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&, t]() {
            for (i64 b = 1 + static_cast<i64>(t); b <= bmax;
                 b += static_cast<i64>(jobs))
                search_one_b(m, H, b, parts[t]);
        });
    for (auto& th : pool) th.join();

    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& part : parts)
        for (const auto& h : part) {
            Int bb = Int(static_cast<long>(h.b)) * Int(static_cast<long>(h.b));
            Rat X(Int(static_cast<long>(h.a)), bb);
            Rat Y(Int(std::to_string(static_cast<long long>(h.y))), bb * bb);
            X.canonicalize();
            Y.canonicalize();
            out.emplace_back(X, Y);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ct
