// hilbfrob: exact computations with Hilbert and Kummer algebras of weighted
// graded Frobenius algebras, their Fock-space operators, and the associated
// Hodge generating functions.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hilbfrob/io.hpp"
#include "hilbfrob/kummer.hpp"
#include "hilbfrob/models.hpp"
#include "hilbfrob/selftest.hpp"
#include "hilbfrob/series.hpp"

using namespace hilbfrob;

namespace {

struct GlobalOpts {
    std::string format = "table";
    unsigned long long seed = 12345;
    long long budget = kDefaultHilbertBudget;
    int jobs = 1;
};

Presentation resolve_model(const std::string& spec) {
    auto names = models::model_names();
    if (std::find(names.begin(), names.end(), spec) != names.end())
        return models::model(spec).pres;
    Presentation p = load_presentation_file(spec);
    validate_or_throw(p);
    return p;
}

Element parse_element_spec(const Presentation& p, const std::string& spec) {
    // "id=coeff,id=coeff" with rational coefficients
    Element out = p.zero_element();
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        std::string id = item.substr(0, eq);
        Rational c = eq == std::string::npos ? Rational(1) : Rational::parse(item.substr(eq + 1));
        sparse_add_term(out.coords, p.index_of(id), c);
    }
    return out;
}

Weight parse_weight(const WeightGroup& g, const std::string& spec) {
    std::vector<int64_t> raw;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) raw.push_back(std::stoll(item));
    return g.reduce(std::move(raw));
}

void print_validation(const GlobalOpts& g, const std::string& name, const ValidationReport& rep) {
    if (g.format == "json") {
        nlohmann::json out;
        out["model"] = name;
        out["usable"] = rep.usable();
        out["checks"] = nlohmann::json::array();
        for (const auto& c : rep.checks)
            out["checks"].push_back({{"axiom", c.axiom}, {"pass", c.pass}, {"witness", c.witness}});
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << name << ":\n";
    for (const auto& c : rep.checks) {
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.axiom;
        if (!c.pass) std::cout << "  witness: " << c.witness;
        std::cout << "\n";
    }
    std::cout << (rep.usable() ? "usable" : "rejected") << "\n";
}

void print_hodge_grid(const HodgePolynomial& poly) {
    if (poly.is_zero()) {
        std::cout << "  0\n";
        return;
    }
    int imin = 1 << 20, imax = -(1 << 20), jmin = 1 << 20, jmax = -(1 << 20);
    for (const auto& [ij, c] : poly.coeffs) {
        imin = std::min(imin, ij.first);
        imax = std::max(imax, ij.first);
        jmin = std::min(jmin, ij.second);
        jmax = std::max(jmax, ij.second);
    }
    std::cout << "  i\\j ";
    for (int j = jmin; j <= jmax; ++j) std::cout << "\t" << j;
    std::cout << "\n";
    for (int i = imax; i >= imin; --i) {
        std::cout << "  " << i << "  ";
        for (int j = jmin; j <= jmax; ++j) {
            auto it = poly.coeffs.find({i, j});
            std::cout << "\t" << (it == poly.coeffs.end() ? 0LL : it->second);
        }
        std::cout << "\n";
    }
}

int run_validate(const GlobalOpts& g, const std::string& model) {
    Presentation p = [&] {
        auto names = models::model_names();
        if (std::find(names.begin(), names.end(), model) != names.end())
            return models::model(model).pres;
        return load_presentation_file(model);
    }();
    ValidationReport rep = validate(p);
    print_validation(g, p.name.empty() ? model : p.name, rep);
    return rep.usable() ? 0 : 1;
}

int run_models(const GlobalOpts& g, const std::string& action, const std::string& name,
               const std::string& out_path) {
    if (action == "list") {
        if (g.format == "json") {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& n : models::model_names())
                out.push_back({{"name", n}, {"doc", models::model(n).doc}});
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& n : models::model_names())
                std::cout << n << "\n    " << models::model(n).doc << "\n";
        }
        return 0;
    }
    if (action == "export") {
        const Presentation& p = models::model(name).pres;
        if (out_path.empty()) {
            std::cout << presentation_to_json(p).dump(2) << "\n";
        } else {
            save_presentation_file(p, out_path);
            std::cout << "wrote " << out_path << "\n";
        }
        return 0;
    }
    throw Error(ErrorCode::BAD_INPUT, "models: unknown action '" + action + "' (use list|export)");
}

int run_hilbert(const GlobalOpts& g, const std::string& model, int n, bool dims, bool table,
                const std::vector<std::string>& multiply) {
    Presentation H = resolve_model(model);
    HilbertAlgebra A = HilbertAlgebra::build(H, n, g.budget);
    nlohmann::json jout;
    if (dims || (!table && multiply.empty())) {
        if (g.format == "json") {
            jout["dim"] = A.dim();
            jout["pre_invariant_terms"] = A.pre_invariant_terms();
            nlohmann::json by_twist = nlohmann::json::array();
            for (const auto& [L, m] : A.graded_dims()) {
                nlohmann::json degs = nlohmann::json::object();
                for (const auto& [d, c] : m) degs[std::to_string(d)] = c;
                by_twist.push_back({{"twist", L.str()}, {"dims", degs}});
            }
            jout["graded_dims"] = by_twist;
        } else {
            std::cout << "dim H^[" << n << "] = " << A.dim() << "\n";
            for (const auto& [L, m] : A.graded_dims()) {
                std::cout << "  twist " << L.str() << ":";
                for (const auto& [d, c] : m) std::cout << "  deg " << d << ": " << c;
                std::cout << "\n";
            }
        }
    }
    if (table) {
        if (g.format == "json") {
            nlohmann::json t = nlohmann::json::array();
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < A.dim(); ++j) {
                    const SparseVec& prod = A.product_invariant(i, j);
                    if (prod.empty()) continue;
                    nlohmann::json entry = {{"i", i}, {"j", j}, {"coords", nlohmann::json::array()}};
                    for (const auto& [k, c] : prod)
                        entry["coords"].push_back({{"k", k}, {"coeff", c.str()}});
                    t.push_back(entry);
                }
            jout["product_table"] = t;
        } else {
            for (int i = 0; i < A.dim(); ++i)
                for (int j = 0; j < A.dim(); ++j) {
                    const SparseVec& prod = A.product_invariant(i, j);
                    if (prod.empty()) continue;
                    std::cout << "X" << i << " * X" << j << " =";
                    bool first = true;
                    for (const auto& [k, c] : prod) {
                        std::cout << (first ? " " : " + ");
                        if (!c.is_one()) std::cout << c.str() << "*";
                        std::cout << "X" << k;
                        first = false;
                    }
                    std::cout << "\n";
                }
        }
    }
    if (!multiply.empty()) {
        auto parse_arg = [&](const std::string& arg) {
            std::ifstream in(arg);
            if (in) {
                nlohmann::json j;
                in >> j;
                return hilbert_element_from_json(H, n, j);
            }
            return hilbert_element_from_json(H, n, nlohmann::json::parse(arg));
        };
        HilbertElement x = parse_arg(multiply[0]);
        HilbertElement y = parse_arg(multiply[1]);
        HilbertElement prod = product(x, y);
        if (g.format == "json")
            jout["product"] = hilbert_element_to_json(prod);
        else
            std::cout << prod.str() << "\n";
    }
    if (g.format == "json") std::cout << jout.dump(2) << "\n";
    return 0;
}

int run_kummer(const GlobalOpts& g, const std::string& model, int n, const std::string& out_path,
               bool leray) {
    Presentation H =
        model == "abelian" ? models::abelian_with_torsion_weights(n) : resolve_model(model);
    KummerAlgebra K = kummer_build(H, n, g.budget);
    int exit_code = 0;
    nlohmann::json jout;
    if (g.format == "json") {
        jout["dim"] = K.dim();
        nlohmann::json degs = nlohmann::json::object();
        for (const auto& [d, c] : K.dims_by_degree()) degs[std::to_string(d)] = c;
        jout["dims_by_degree"] = degs;
    } else {
        std::cout << "dim K^[" << n << "] = " << K.dim() << "\n";
        for (const auto& [d, c] : K.dims_by_degree())
            std::cout << "  deg " << d << ": " << c << "\n";
    }
    if (leray) {
        LerayReport rep = leray_dimension_check(H, n, K);
        if (g.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& r : rep.rows)
                rows.push_back(
                    {{"degree", r.degree}, {"fock", r.fock_side}, {"kummer", r.kummer_side}});
            jout["leray"] = {{"pass", rep.pass}, {"rows", rows}};
        } else {
            std::cout << "leray identity: " << (rep.pass ? "pass" : "FAIL") << "\n";
            for (const auto& r : rep.rows)
                std::cout << "  deg " << r.degree << ": fock " << r.fock_side << "  vs  "
                          << r.kummer_side << "\n";
        }
        if (!rep.pass) exit_code = 1;
    }
    if (!out_path.empty()) {
        Presentation Q = K.export_presentation();
        save_presentation_file(Q, out_path);
        if (g.format != "json") std::cout << "wrote " << out_path << "\n";
    }
    if (g.format == "json") std::cout << jout.dump(2) << "\n";
    return exit_code;
}

int run_series(const GlobalOpts& g, const std::string& model, int N, bool cover,
               const std::string& twist, const std::string& eval, bool unshift) {
    Presentation H = resolve_model(model);
    HodgeSeries s =
        cover ? cover_series(H, N)
              : hilbert_series(
                    levels_for_twist(
                        H, twist.empty() ? H.group.zero() : parse_weight(H.group, twist), N),
                    N);
    nlohmann::json jout;
    if (!eval.empty()) {
        Rational pv(1), qv(1);
        std::stringstream ss(eval);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorCode::BAD_INPUT, "--eval expects p=..,q=..");
            std::string var = item.substr(0, eq);
            Rational val = Rational::parse(item.substr(eq + 1));
            if (var == "p")
                pv = val;
            else if (var == "q")
                qv = val;
            else
                throw Error(ErrorCode::BAD_INPUT, "--eval: unknown variable '" + var + "'");
        }
        auto power = [](const Rational& base, int e) {
            Rational r(1);
            for (int k = 0; k < std::abs(e); ++k) r *= base;
            if (e < 0) r = Rational(1) / r;
            return r;
        };
        for (int n = 0; n <= N; ++n) {
            std::map<int, Rational> by_deg;
            for (const auto& [ij, c] : s.coeff[n].coeffs)
                by_deg[ij.first + ij.second] +=
                    Rational(c) * power(pv, ij.first) * power(qv, ij.second);
            if (g.format == "json") {
                nlohmann::json degs = nlohmann::json::object();
                for (const auto& [d, v] : by_deg) {
                    int shown = unshift ? d + 2 * n : d;
                    if (!v.is_zero()) degs[std::to_string(shown)] = v.str();
                }
                jout["z^" + std::to_string(n)] = degs;
            } else {
                std::cout << "z^" << n << ":";
                for (const auto& [d, v] : by_deg) {
                    if (v.is_zero()) continue;
                    std::cout << "  deg " << (unshift ? d + 2 * n : d) << ": " << v.str();
                }
                std::cout << "\n";
            }
        }
    } else {
        for (int n = 0; n <= N; ++n) {
            HodgePolynomial poly = s.coeff[n];
            if (unshift) {
                HodgePolynomial shifted;
                for (const auto& [ij, c] : poly.coeffs) shifted.add(ij.first + n, ij.second + n, c);
                poly = shifted;
            }
            if (g.format == "json") {
                nlohmann::json entries = nlohmann::json::array();
                for (const auto& [ij, c] : poly.coeffs)
                    entries.push_back({{"i", ij.first}, {"j", ij.second}, {"h", c}});
                jout["z^" + std::to_string(n)] = entries;
            } else {
                std::cout << "z^" << n << ":\n";
                print_hodge_grid(poly);
            }
        }
    }
    if (g.format == "json") std::cout << jout.dump(2) << "\n";
    return 0;
}

int run_fock(const GlobalOpts& g, const std::string& model, const std::string& checks,
             int max_weight, int max_level, const std::string& twist, const std::string& k_class) {
    Presentation H = resolve_model(model);
    Weight L = twist.empty() ? H.group.zero() : parse_weight(H.group, twist);
    FockSpace fs(H, L);
    CommutatorCheckOptions opt;
    opt.max_weight = max_weight;
    opt.max_level = max_level;
    opt.jobs = g.jobs;
    if (!k_class.empty()) opt.k_class = parse_element_spec(H, k_class);
    auto reports = commutator_check(fs, checks, opt);
    bool all = true;
    nlohmann::json jout = nlohmann::json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        if (g.format == "json") {
            jout.push_back({{"relation", r.relation},
                            {"pass", r.pass},
                            {"cases", r.cases},
                            {"witness", r.witness}});
        } else {
            std::cout << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.relation << " (" << r.cases
                      << " cases)";
            if (!r.pass) std::cout << "  witness: " << r.witness;
            std::cout << "\n";
        }
    }
    if (g.format == "json") std::cout << jout.dump(2) << "\n";
    return all ? 0 : 1;
}

int run_selftest_cmd(const GlobalOpts& g, const std::string& criteria) {
    SelftestOptions opt;
    opt.jobs = g.jobs;
    opt.budget = g.budget;
    opt.seed = g.seed;
    if (!criteria.empty()) {
        std::stringstream ss(criteria);
        std::string item;
        while (std::getline(ss, item, ',')) opt.criteria.push_back(std::stoi(item));
    }
    nlohmann::json jout = nlohmann::json::array();
    bool all = run_selftest(opt, [&](const CriterionResult& r) {
        if (g.format == "json") {
            jout.push_back({{"criterion", r.number},
                            {"title", r.title},
                            {"pass", r.pass},
                            {"detail", r.detail}});
        } else {
            std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] criterion " << r.number << ": "
                      << r.title << "\n";
            if (!r.detail.empty()) std::cout << "       " << r.detail << "\n";
            std::cout.flush();
        }
        std::cerr << "criterion " << r.number << " took " << r.seconds << "s\n";
    });
    if (g.format == "json") std::cout << jout.dump(2) << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hilbert/Kummer algebras, Fock operators and Hodge series"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("HILBFROB_BUDGET")) g.budget = std::atoll(env);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_option("--budget", g.budget, "dimension budget for H_n (env HILBFROB_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

    std::string model, action, name, out_path, checks = "all", twist, k_class, eval, criteria;
    int n = 2, N = 3, max_weight = 4, max_level = 3;
    bool dims = false, table = false, cover = false, unshift = false, leray = false;
    std::vector<std::string> multiply;

    auto* c_validate = app.add_subcommand("validate", "run the axiom checks on a presentation");
    c_validate->add_option("--model", model, "model name or presentation file")->required();

    auto* c_models = app.add_subcommand("models", "list or export the built-in models");
    c_models->add_option("action", action, "list | export")->required();
    c_models->add_option("name", name, "model name (for export)");
    c_models->add_option("-o,--out", out_path, "output file");

    auto* c_hilbert = app.add_subcommand("hilbert", "build H^[n]");
    c_hilbert->add_option("--model", model)->required();
    c_hilbert->add_option("-n", n, "number of points")->required();
    c_hilbert->add_flag("--dims", dims, "print graded dimensions");
    c_hilbert->add_flag("--table", table, "print the invariant product table");
    c_hilbert
        ->add_option("--multiply", multiply, "two Hilbert elements (inline JSON or file paths)")
        ->expected(2)
        ->allow_extra_args(false);

    auto* c_kummer = app.add_subcommand("kummer", "build K^[n]");
    c_kummer->add_option("--model", model)->required();
    c_kummer->add_option("-n", n, "number of points")->required();
    c_kummer->add_option("--export", out_path, "write the quotient presentation");
    c_kummer->add_flag("--leray", leray, "run the dimension identity check");

    auto* c_series = app.add_subcommand("series", "hilbert / cover Hodge series");
    c_series->add_option("--model", model)->required();
    c_series->add_option("-N", N, "truncation order")->required();
    c_series->add_flag("--cover", cover, "sum over the whole weight group");
    c_series->add_option("--twist", twist, "twist L as comma-separated coordinates");
    c_series->add_option("--eval", eval, "evaluate, e.g. p=1,q=1");
    c_series->add_flag("--unshift", unshift, "report unshifted (bi)degrees");

    auto* c_fock = app.add_subcommand("fock", "commutator relation sweeps");
    c_fock->add_option("--model", model)->required();
    c_fock->add_option("--check", checks, "heisenberg,vir_and_q,virasoro,euler,lehn,all");
    c_fock->add_option("--max-weight", max_weight, "span: monomials of weight <= W");
    c_fock->add_option("--max-level", max_level, "operator levels |n| <= this");
    c_fock->add_option("--twist", twist, "twist L as comma-separated coordinates");
    c_fock->add_option("--k-class", k_class, "canonical class, e.g. t=2");

    auto* c_selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    c_selftest->add_option("--criteria", criteria, "comma-separated criterion numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_validate->parsed()) return run_validate(g, model);
        if (c_models->parsed()) return run_models(g, action, name, out_path);
        if (c_hilbert->parsed()) return run_hilbert(g, model, n, dims, table, multiply);
        if (c_kummer->parsed()) return run_kummer(g, model, n, out_path, leray);
        if (c_series->parsed()) return run_series(g, model, N, cover, twist, eval, unshift);
        if (c_fock->parsed()) return run_fock(g, model, checks, max_weight, max_level, twist, k_class);
        if (c_selftest->parsed()) return run_selftest_cmd(g, criteria);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
