#include "hilbfrob/series.hpp"

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

HodgeSeries HodgeSeries::one(int N) {
    HodgeSeries s;
    s.truncation = N;
    s.coeff.resize(N + 1);
    s.coeff[0].add(0, 0, 1);
    return s;
}

HodgeSeries HodgeSeries::mul(const HodgeSeries& o) const {
    HodgeSeries out;
    out.truncation = truncation;
    out.coeff.resize(truncation + 1);
    for (int a = 0; a <= truncation; ++a) {
        if (coeff[a].is_zero()) continue;
        for (int b = 0; a + b <= truncation && b <= o.truncation; ++b) {
            if (o.coeff[b].is_zero()) continue;
            for (const auto& [ka, va] : coeff[a].coeffs)
                for (const auto& [kb, vb] : o.coeff[b].coeffs)
                    out.coeff[a + b].add(ka.first + kb.first, ka.second + kb.second, va * vb);
        }
    }
    return out;
}

void HodgeSeries::add(const HodgeSeries& o) {
    for (int a = 0; a <= truncation && a <= o.truncation; ++a)
        for (const auto& [k, v] : o.coeff[a].coeffs) coeff[a].add(k.first, k.second, v);
}

HodgePolynomial hodge_polynomial_of_weight(const Presentation& H, const Weight& w) {
    HodgePolynomial out;
    for (int32_t b : H.basis_of_weight(w)) {
        if (!H.basis[b].bidegree)
            throw Error(ErrorCode::MISSING_BIDEGREE,
                        "basis vector " + H.basis[b].id + " has no bidegree");
        auto [i, j] = *H.basis[b].bidegree;
        out.add(i, j, 1);
    }
    return out;
}

LevelData levels_for_twist(const Presentation& H, const Weight& L, int N) {
    LevelData levels(N + 1);
    for (int m = 1; m <= N; ++m)
        levels[m] = hodge_polynomial_of_weight(H, H.group.scale(m, L));
    return levels;
}

namespace {

long long binom_ll(long long n, long long k) {
    Rational b = binomial(n, k);
    return b.num_ll();
}

} // namespace

HodgeSeries hilbert_series(const LevelData& levels, int N) {
    if (static_cast<int>(levels.size()) <= N)
        throw Error(ErrorCode::MISSING_LEVEL,
                    "levels supplied up to m = " + std::to_string(levels.size() - 1) +
                        ", need m <= " + std::to_string(N));
    HodgeSeries s = HodgeSeries::one(N);
    for (int m = 1; m <= N; ++m) {
        for (const auto& [ij, h] : levels[m].coeffs) {
            if (h < 0) throw Error(ErrorCode::BAD_INPUT, "negative Hodge number");
            auto [i, j] = ij;
            const bool odd = ((i + j) & 1) != 0;
            HodgeSeries factor;
            factor.truncation = N;
            factor.coeff.resize(N + 1);
            factor.coeff[0].add(0, 0, 1);
            // (1 - (-1)^{i+j} u)^{-(-1)^{i+j} h}: for even i+j a geometric
            // factor (1-u)^{-h}, for odd a polynomial factor (1+u)^{h}
            for (int k = 1; k * m <= N; ++k) {
                long long c = odd ? (k <= h ? binom_ll(h, k) : 0) : binom_ll(h + k - 1, k);
                if (c != 0) factor.coeff[k * m].add(k * i, k * j, c);
            }
            s = s.mul(factor);
        }
    }
    return s;
}

HodgeSeries cover_series(const Presentation& H, int N) {
    HodgeSeries total;
    total.truncation = N;
    total.coeff.resize(N + 1);
    for (const Weight& L : H.group.elements())
        total.add(hilbert_series(levels_for_twist(H, L, N), N));
    return total;
}

std::vector<std::map<int, long long>> fock_dimensions(const Presentation& H, const Weight& L,
                                                      int N) {
    FockSpace fs(H, L);
    std::vector<std::map<int, long long>> out(N + 1);
    for (int w = 0; w <= N; ++w)
        for (const FockMonomial& m : fs.monomials_of_weight(w)) out[w][m.degree(H)]++;
    return out;
}

} // namespace hilbfrob
