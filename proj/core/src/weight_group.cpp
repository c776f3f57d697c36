#include "hilbfrob/weight_group.hpp"

#include <stdexcept>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

std::string Weight::str() const {
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

WeightGroup WeightGroup::integers_mod_period(int period) {
    if (period < 1) throw Error(ErrorCode::BAD_INPUT, "weight period must be >= 1");
    WeightGroup g;
    g.kind_ = Kind::INTEGERS_MOD_PERIOD;
    g.moduli_ = {period};
    return g;
}

WeightGroup WeightGroup::finite_abelian(std::vector<int32_t> invariant_factors) {
    if (invariant_factors.empty())
        throw Error(ErrorCode::BAD_INPUT, "finite abelian group needs at least one factor");
    for (int32_t m : invariant_factors)
        if (m < 1) throw Error(ErrorCode::BAD_INPUT, "invariant factors must be >= 1");
    WeightGroup g;
    g.kind_ = Kind::FINITE_ABELIAN;
    g.moduli_ = std::move(invariant_factors);
    return g;
}

Weight WeightGroup::zero() const {
    Weight w;
    w.coords.assign(moduli_.size(), 0);
    return w;
}

Weight WeightGroup::reduce(std::vector<int64_t> raw) const {
    if (raw.size() != moduli_.size())
        throw Error(ErrorCode::BAD_INPUT, "weight coordinate count mismatch");
    Weight w;
    w.coords.resize(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        int64_t m = moduli_[i];
        int64_t r = raw[i] % m;
        if (r < 0) r += m;
        w.coords[i] = static_cast<int32_t>(r);
    }
    return w;
}

Weight WeightGroup::add(const Weight& a, const Weight& b) const {
    std::vector<int64_t> raw(moduli_.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = int64_t(a.coords[i]) + b.coords[i];
    return reduce(std::move(raw));
}

Weight WeightGroup::neg(const Weight& a) const {
    std::vector<int64_t> raw(moduli_.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = -int64_t(a.coords[i]);
    return reduce(std::move(raw));
}

Weight WeightGroup::scale(int64_t n, const Weight& a) const {
    std::vector<int64_t> raw(moduli_.size());
    for (size_t i = 0; i < raw.size(); ++i) raw[i] = n * int64_t(a.coords[i]);
    return reduce(std::move(raw));
}

int WeightGroup::order(const Weight& a) const {
    Weight acc = a;
    int m = 1;
    while (!acc.is_zero()) {
        acc = add(acc, a);
        ++m;
    }
    return m;
}

long long WeightGroup::size() const {
    long long s = 1;
    for (int32_t m : moduli_) s *= m;
    return s;
}

std::vector<Weight> WeightGroup::elements() const {
    std::vector<Weight> out;
    out.reserve(static_cast<size_t>(size()));
    Weight w = zero();
    while (true) {
        out.push_back(w);
        size_t i = w.coords.size();
        while (i > 0) {
            --i;
            if (++w.coords[i] < moduli_[i]) break;
            w.coords[i] = 0;
            if (i == 0) return out;
        }
    }
}

} // namespace hilbfrob
