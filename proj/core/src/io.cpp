#include "hilbfrob/io.hpp"

#include <fstream>

#include "hilbfrob/errors.hpp"

namespace hilbfrob {

using nlohmann::json;

namespace {

json weight_to_json(const Weight& w) {
    json a = json::array();
    for (int32_t c : w.coords) a.push_back(c);
    return a;
}

Weight weight_from_json(const WeightGroup& g, const json& j) {
    std::vector<int64_t> raw;
    if (j.is_number_integer()) {
        raw.push_back(j.get<int64_t>());
    } else {
        for (const auto& c : j) raw.push_back(c.get<int64_t>());
    }
    return g.reduce(std::move(raw));
}

json coords_to_json(const Presentation& p, const SparseVec& v) {
    json a = json::array();
    for (const auto& [i, c] : v) a.push_back({{"id", p.basis[i].id}, {"coeff", c.str()}});
    return a;
}

SparseVec coords_from_json(const Presentation& p, const json& j) {
    SparseVec out;
    for (const auto& t : j)
        sparse_add_term(out, p.index_of(t.at("id").get<std::string>()),
                        Rational::parse(t.at("coeff").get<std::string>()));
    return out;
}

json tensor_map_to_json(const Presentation& p,
                        const std::unordered_map<int32_t, Tensor2>& map) {
    json a = json::array();
    // deterministic output: iterate in basis order
    for (int32_t x = 0; x < p.dim(); ++x) {
        auto it = map.find(x);
        if (it == map.end()) continue;
        for (const auto& t : it->second)
            a.push_back({{"x", p.basis[x].id},
                         {"a", p.basis[t.a].id},
                         {"b", p.basis[t.b].id},
                         {"coeff", t.coeff.str()}});
    }
    return a;
}

std::unordered_map<int32_t, Tensor2> tensor_map_from_json(const Presentation& p, const json& j) {
    std::unordered_map<int32_t, Tensor2> out;
    for (const auto& t : j) {
        int32_t x = p.index_of(t.at("x").get<std::string>());
        out[x].push_back({p.index_of(t.at("a").get<std::string>()),
                          p.index_of(t.at("b").get<std::string>()),
                          Rational::parse(t.at("coeff").get<std::string>())});
    }
    return out;
}

} // namespace

json presentation_to_json(const Presentation& p) {
    json j;
    j["format"] = "hilbfrob-presentation";
    j["name"] = p.name;
    if (!p.note.empty()) j["note"] = p.note;
    j["degree_d"] = p.degree_d;
    if (p.group.kind() == WeightGroup::Kind::INTEGERS_MOD_PERIOD) {
        j["weight_group"] = {{"kind", "integers_mod_period"}, {"period", p.group.period()}};
    } else {
        j["weight_group"] = {{"kind", "finite_abelian"}, {"invariant_factors", p.group.moduli()}};
    }
    json basis = json::array();
    for (const auto& b : p.basis) {
        json e = {{"id", b.id}, {"degree", b.degree}, {"weight", weight_to_json(b.weight)}};
        if (b.bidegree) e["bidegree"] = {b.bidegree->first, b.bidegree->second};
        basis.push_back(e);
    }
    j["basis"] = basis;
    j["unit"] = coords_to_json(p, p.unit);
    json mult = json::array();
    for (int32_t a = 0; a < p.dim(); ++a)
        for (int32_t b = 0; b < p.dim(); ++b)
            for (const auto& [x, c] : p.mult_basis(a, b))
                mult.push_back({{"a", p.basis[a].id},
                                {"b", p.basis[b].id},
                                {"out", p.basis[x].id},
                                {"coeff", c.str()}});
    j["mult"] = mult;
    if (p.integral) j["integral"] = coords_to_json(p, *p.integral);
    if (p.diagonal) j["diagonal"] = tensor_map_to_json(p, *p.diagonal);
    if (p.hopf) {
        j["hopf"] = {{"delta", tensor_map_to_json(p, p.hopf->delta)},
                     {"epsilon", coords_to_json(p, p.hopf->epsilon)}};
    }
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    if (j.value("format", "") != "hilbfrob-presentation")
        throw Error(ErrorCode::BAD_INPUT, "not a hilbfrob presentation file");
    p.name = j.value("name", "");
    p.note = j.value("note", "");
    p.degree_d = j.at("degree_d").get<int>();
    const json& wg = j.at("weight_group");
    std::string kind = wg.at("kind").get<std::string>();
    if (kind == "integers_mod_period") {
        p.group = WeightGroup::integers_mod_period(wg.at("period").get<int>());
    } else if (kind == "finite_abelian") {
        p.group = WeightGroup::finite_abelian(wg.at("invariant_factors").get<std::vector<int32_t>>());
    } else {
        throw Error(ErrorCode::BAD_INPUT, "unknown weight group kind '" + kind + "'");
    }
    for (const auto& b : j.at("basis")) {
        BasisVector v;
        v.id = b.at("id").get<std::string>();
        v.degree = b.at("degree").get<int>();
        v.weight = weight_from_json(p.group, b.at("weight"));
        if (b.contains("bidegree"))
            v.bidegree = {{b["bidegree"][0].get<int>(), b["bidegree"][1].get<int>()}};
        p.basis.push_back(std::move(v));
    }
    p.finalize();
    p.unit = coords_from_json(p, j.at("unit"));
    for (const auto& m : j.at("mult"))
        p.set_mult(p.index_of(m.at("a").get<std::string>()),
                   p.index_of(m.at("b").get<std::string>()),
                   p.index_of(m.at("out").get<std::string>()),
                   Rational::parse(m.at("coeff").get<std::string>()));
    if (j.contains("integral")) p.integral = coords_from_json(p, j["integral"]);
    if (j.contains("diagonal")) p.diagonal = tensor_map_from_json(p, j["diagonal"]);
    if (j.contains("hopf")) {
        HopfData h;
        h.delta = tensor_map_from_json(p, j["hopf"].at("delta"));
        h.epsilon = coords_from_json(p, j["hopf"].at("epsilon"));
        p.hopf = std::move(h);
    }
    p.finalize();
    return p;
}

Presentation load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BAD_INPUT, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::BAD_INPUT, "JSON parse error in '" + path + "': " + e.what());
    }
    return presentation_from_json(j);
}

void save_presentation_file(const Presentation& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::BAD_INPUT, "cannot write '" + path + "'");
    out << presentation_to_json(p).dump(2) << "\n";
}

json element_to_json(const Presentation& p, const Element& x) {
    return coords_to_json(p, x.coords);
}

Element element_from_json(const Presentation& p, const json& j) {
    return p.element(coords_from_json(p, j));
}

json hilbert_element_to_json(const HilbertElement& x) {
    const Presentation& H = *x.owner;
    json a = json::array();
    for (const auto& [v, c] : x.terms) {
        json labels = json::object();
        OrbitPartition part = orbits(v.sigma);
        for (size_t i = 0; i < part.blocks.size(); ++i)
            labels[std::to_string(part.blocks[i][0] + 1)] = H.basis[v.labels[i]].id;
        json t = {{"sigma", v.sigma.cycle_str()}, {"labels", labels}, {"coeff", c.str()}};
        if (!v.L.is_zero()) t["twist"] = weight_to_json(v.L);
        a.push_back(t);
    }
    return a;
}

HilbertElement hilbert_element_from_json(const Presentation& p, int n, const json& j) {
    HilbertElement out;
    out.owner = &p;
    out.n = n;
    for (const auto& t : j) {
        HilbertBasisVector v;
        v.sigma = Permutation::from_cycles(t.at("sigma").get<std::string>(), n);
        v.L = t.contains("twist") ? weight_from_json(p.group, t["twist"]) : p.group.zero();
        OrbitPartition part = orbits(v.sigma);
        v.labels.resize(part.blocks.size());
        const json& labels = t.at("labels");
        for (size_t i = 0; i < part.blocks.size(); ++i) {
            std::string key = std::to_string(part.blocks[i][0] + 1);
            if (!labels.contains(key))
                throw Error(ErrorCode::BAD_INPUT, "missing label for orbit at " + key);
            v.labels[i] = p.index_of(labels[key].get<std::string>());
            Weight expect = p.group.scale(static_cast<long long>(part.blocks[i].size()), v.L);
            if (p.basis[v.labels[i]].weight != expect)
                throw Error(ErrorCode::WEIGHT_MISMATCH,
                            "label at orbit " + key + " has the wrong weight");
        }
        out.add_term(v, Rational::parse(t.at("coeff").get<std::string>()));
    }
    return out;
}

json fock_vector_to_json(const Presentation& p, const FockVector& v) {
    json a = json::array();
    for (const auto& [m, c] : v.terms) {
        json factors = json::array();
        for (size_t i = 0; i < m.size(); ++i)
            factors.push_back({m.level_at(i), p.basis[m.basis_at(i)].id});
        a.push_back({{"factors", factors}, {"coeff", c.str()}});
    }
    return a;
}

} // namespace hilbfrob
