#pragma once

#include <map>

#include "hilbfrob/fock.hpp"
#include "hilbfrob/presentation.hpp"

namespace hilbfrob {

/// Laurent polynomial in (p, q) with integer coefficients; bidegrees are in
/// the shifted convention throughout.
struct HodgePolynomial {
    std::map<std::pair<int, int>, long long> coeffs;

    void add(int i, int j, long long c) {
        if (c == 0) return;
        auto& slot = coeffs[{i, j}];
        slot += c;
        if (slot == 0) coeffs.erase({i, j});
    }
    bool is_zero() const { return coeffs.empty(); }
    long long total() const {
        long long t = 0;
        for (const auto& [k, v] : coeffs) t += v;
        return t;
    }
    /// evaluation at p = q = 1 grouped by total degree i + j
    std::map<int, long long> by_degree() const {
        std::map<int, long long> out;
        for (const auto& [k, v] : coeffs) out[k.first + k.second] += v;
        return out;
    }
    bool operator==(const HodgePolynomial& o) const = default;
};

/// Truncated power series in z with HodgePolynomial coefficients.
struct HodgeSeries {
    int truncation = 0;
    std::vector<HodgePolynomial> coeff; // indexed by the z-exponent, 0..truncation

    static HodgeSeries one(int N);
    HodgeSeries mul(const HodgeSeries& o) const;
    void add(const HodgeSeries& o);
    bool operator==(const HodgeSeries& o) const = default;
};

/// Hodge polynomial of the weight-w component (needs bidegrees on that
/// component; throws MISSING_BIDEGREE otherwise).
HodgePolynomial hodge_polynomial_of_weight(const Presentation& H, const Weight& w);

/// levels[m] for m = 1..N; levels[0] is ignored.
using LevelData = std::vector<HodgePolynomial>;

/// Level data m -> Hodge polynomial of H(m L).
LevelData levels_for_twist(const Presentation& H, const Weight& L, int N);

/// The product formula
///   sum_n h^{i,j}(Hilb^n, L^[n]) p^i q^j z^n
///     = prod_{m>=1} prod_{i,j} (1 - (-1)^{i+j} p^i q^j z^m)^{-(-1)^{i+j} h^{i,j}(m)},
/// expanded exactly up to z^N.
HodgeSeries hilbert_series(const LevelData& levels, int N);

/// Sum over L in G of hilbert_series for the twist L.
HodgeSeries cover_series(const Presentation& H, int N);

/// Super-symmetric-algebra dimensions by (weight, degree), computed by direct
/// monomial enumeration; the independent oracle for the series coefficients.
std::vector<std::map<int, long long>> fock_dimensions(const Presentation& H, const Weight& L,
                                                      int N);

} // namespace hilbfrob
