#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilbfrob {

/// Canonically reduced element of a weight group (see WeightGroup). For
/// INTEGERS_MOD_PERIOD the tuple has one coordinate in [0, k); for
/// FINITE_ABELIAN one coordinate in [0, m_i) per invariant factor.
struct Weight {
    std::vector<int32_t> coords;

    bool operator==(const Weight& o) const = default;
    auto operator<=>(const Weight& o) const = default;
    bool is_zero() const {
        for (int32_t c : coords)
            if (c != 0) return false;
        return true;
    }
    std::string str() const;
};

/// The indexing group of a weighting. INTEGERS_MOD_PERIOD k models a
/// Z-weighting whose weight spaces repeat with period k (levels of a torsion
/// local system); FINITE_ABELIAN models G = prod Z/m_i via invariant factors.
class WeightGroup {
public:
    enum class Kind { INTEGERS_MOD_PERIOD, FINITE_ABELIAN };

    static WeightGroup integers_mod_period(int period);
    static WeightGroup finite_abelian(std::vector<int32_t> invariant_factors);
    static WeightGroup trivial() { return integers_mod_period(1); }

    Kind kind() const { return kind_; }
    int period() const { return moduli_[0]; }
    const std::vector<int32_t>& moduli() const { return moduli_; }

    Weight zero() const;
    Weight reduce(std::vector<int64_t> raw) const;
    Weight add(const Weight& a, const Weight& b) const;
    Weight neg(const Weight& a) const;
    Weight scale(int64_t n, const Weight& a) const;
    /// Smallest m >= 1 with m*a = 0.
    int order(const Weight& a) const;

    long long size() const;
    /// All group elements in lexicographic order.
    std::vector<Weight> elements() const;

    bool operator==(const WeightGroup& o) const = default;

private:
    Kind kind_ = Kind::INTEGERS_MOD_PERIOD;
    std::vector<int32_t> moduli_{1};
};

} // namespace hilbfrob
