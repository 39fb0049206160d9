#pragma once

#include <string>
#include <tuple>

namespace ct {

// An abelian group C_m x C_n with m | n; group order is m*n.
struct TorsionStructure {
    int m{1};
    int n{1};

    long order() const { return (long)m * n; }
    static TorsionStructure cyclic(int n) { return {1, n}; }

    std::string str() const {
        if (m == 1) return "C" + std::to_string(n);
        return "C" + std::to_string(m) + " x C" + std::to_string(n);
    }

    friend bool operator==(const TorsionStructure& a, const TorsionStructure& b) {
        return a.m == b.m && a.n == b.n;
    }
    friend bool operator!=(const TorsionStructure& a, const TorsionStructure& b) {
        return !(a == b);
    }
    friend bool operator<(const TorsionStructure& a, const TorsionStructure& b) {
        return std::tie(a.m, a.n) < std::tie(b.m, b.n);
    }
};

}  // namespace ct
