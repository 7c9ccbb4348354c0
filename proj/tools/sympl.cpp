#include <CLI11.hpp>

#include "sympl/json_io.hpp"
#include "sympl/power.hpp"
#include "sympl/rng.hpp"

#include <fstream>
#include <iostream>

using namespace sympl;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("parse error in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
}

int cmd_check_poisson(const std::string& input, const std::string& out_path) {
    PolyBivector pi = bivector_from_json(load_json(input));
    AltTensor j = jacobiator(pi);
    bool ok = j.is_zero();
    json rep{{"poisson", ok}};
    if (!ok) {
        json bad = json::array();
        for (const auto& [idx, p] : j.components()) {
            if (p.is_zero()) continue;
            bad.push_back(json{{"indices", {idx[0] + 1, idx[1] + 1, idx[2] + 1}}, {"poly", p.str()}});
        }
        rep["jacobiator_nonzero"] = bad;
    }
    emit(rep, out_path);
    std::cerr << (ok ? "poisson: yes" : "poisson: NO") << "\n";
    return ok ? 0 : 1;
}

RelationalGroupoidLinear example_by_name(const std::string& name) {
    auto parse_n = [](const std::string& s) {
        int n = std::stoi(s);
        if (n < 1 || n > 4) throw std::invalid_argument("example size out of range [1,4]");
        return n;
    };
    if (name.rfind("pair:", 0) == 0) return build_from_groupoid(pair_groupoid(parse_n(name.substr(5))));
    if (name.rfind("cotangent:", 0) == 0)
        return build_from_groupoid(cotangent_fiber_groupoid(parse_n(name.substr(10))));
    if (name == "point") return point_groupoid();
    if (name == "lagrangian-triple:admissible" || name == "lagrangian-triple:literal") {
        auto g = standard_space(1);
        auto lag = Subspace::span_of(g, {{Rat(1), Rat(0)}});
        Mat flip{{1, 0}, {0, -1}};
        Mat i = name.ends_with("literal") ? Mat::identity(2) : flip;
        return lagrangian_triple(g, lag, i);
    }
    if (name.rfind("power:", 0) == 0) {
        // power:pair:1:2 or power:cotangent:1:3
        auto rest = name.substr(6);
        auto c1 = rest.find(':'), c2 = rest.rfind(':');
        if (c1 == std::string::npos || c2 == c1)
            throw std::invalid_argument("power example: power:<zoo>:<n>:<k>");
        auto zoo = rest.substr(0, c1);
        int n = parse_n(rest.substr(c1 + 1, c2 - c1 - 1));
        int k = parse_n(rest.substr(c2 + 1));
        auto g = zoo == "pair" ? pair_groupoid(n) : cotangent_fiber_groupoid(n);
        return power_groupoid(g, k);
    }
    throw std::invalid_argument("unknown example '" + name +
                                "' (try pair:n, cotangent:n, point, lagrangian-triple:admissible, "
                                "lagrangian-triple:literal, power:pair:n:k)");
}

int cmd_verify_relational(const std::string& example, const std::string& out_path) {
    auto rg = example_by_name(example);
    auto axioms = verify_axioms(rg);
    auto core = derive_core(rg);
    auto regular = verify_regular(rg, core);
    auto pois = induced_poisson(rg, core);
    json rep = to_json(axioms);
    rep["regular"] = to_json(regular);
    rep["induced_poisson"] = to_json(pois);
    rep["dims"] = json{{"G", rg.space.dim},
                       {"L", rg.L.dim()},
                       {"L1", rank(core.L1.graph)},
                       {"L2", rank(core.L2.graph)},
                       {"C", core.C.dim()},
                       {"M", core.dim_M}};
    emit(rep, out_path);
    bool ok = axioms.all_pass() && regular.all_pass();
    std::cerr << "example " << example << ": axioms " << (axioms.all_pass() ? "pass" : "FAIL")
              << ", regular " << (regular.all_pass() ? "pass" : "FAIL") << ", dim M = " << core.dim_M
              << "\n";
    return ok ? 0 : 1;
}

int cmd_psm(const std::string& input, const std::string& eta_path, const std::string& x0_str,
            int grid, int samples, uint64_t seed, const std::string& out_path) {
    PolyBivector pi = bivector_from_json(load_json(input));
    int n = pi.dim();

    std::vector<Rat> x0(n, Rat(0));
    if (!x0_str.empty()) {
        x0 = vec_from_json(json::parse(x0_str));
        if (static_cast<int>(x0.size()) != n)
            throw std::invalid_argument("--x0 length != bivector dimension");
    }

    std::vector<std::vector<std::vector<Rat>>> eta_batches;
    if (!eta_path.empty()) {
        json j = load_json(eta_path);
        std::vector<std::vector<Rat>> eta;
        for (const auto& row : j) eta.push_back(vec_from_json(row));
        eta_batches.push_back(std::move(eta));
    } else {
        RatRng rng(seed);
        for (int s = 0; s < samples; ++s) {
            std::vector<std::vector<Rat>> eta;
            for (int k = 0; k < grid; ++k) eta.push_back(rng.rat_vec(n));
            eta_batches.push_back(std::move(eta));
        }
    }

    json fields = json::array();
    bool all_coiso = true;
    bool class_supported = true;
    bool class_ok = true;
    for (const auto& eta : eta_batches) {
        auto f = integrate_apath(pi, x0, eta);
        auto lin = linearized_constraint_space(f);
        json e{{"residual", rat_str(apath_residual(f))},
               {"classification", to_string(lin.classification)},
               {"coisotropic", lin.classification == SubspaceClass::coisotropic ||
                                   lin.classification == SubspaceClass::lagrangian},
               {"tangent_dim", lin.tangent.dim()},
               {"defect", lin.defect}};
        if (!(lin.classification == SubspaceClass::coisotropic ||
              lin.classification == SubspaceClass::lagrangian))
            all_coiso = false;
        // class groupoid cross-check where supported: concat against the
        // trivial path must not move the invariant.
        try {
            auto c = classify_path(f);
            std::vector<std::vector<Rat>> zero_eta(f.N, std::vector<Rat>(n, Rat(0)));
            auto triv = integrate_apath(pi, f.x[f.N], zero_eta);
            auto glued = classify_path(concat(f, triv));
            auto expected = class_compose(c, classify_path(triv));
            bool ok = glued == expected && classify_path(refine(f)) == c;
            e["class_check"] = ok ? "pass" : "fail";
            if (!ok) class_ok = false;
        } catch (const std::invalid_argument&) {
            e["class_check"] = "unsupported";
            class_supported = false;
        }
        fields.push_back(e);
    }
    json rep{{"bivector_dim", n},
             {"grid", eta_batches.empty() ? grid : static_cast<int>(eta_batches[0].size())},
             {"fields", fields},
             {"all_coisotropic", all_coiso},
             {"class_check", class_supported ? (class_ok ? "pass" : "fail") : "unsupported"}};
    emit(rep, out_path);
    std::cerr << "psm: " << fields.size() << " field(s), coisotropic: " << (all_coiso ? "yes" : "NO")
              << ", class groupoid: " << rep["class_check"].get<std::string>() << "\n";
    return (all_coiso && class_ok) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symplectic/Poisson verification toolkit"};
    app.require_subcommand(1);

    std::string input, eta_path, x0_str, out_path, example;
    int grid = 8, samples = 1;
    uint64_t seed = 1;

    auto* cp = app.add_subcommand("check-poisson", "Jacobi condition for a polynomial bivector");
    cp->add_option("--input", input, "bivector JSON file")->required();
    cp->add_option("--out", out_path, "write the JSON report to a file");

    auto* vr = app.add_subcommand("verify-relational", "relational groupoid axiom suite");
    vr->add_option("--example", example, "pair:n | cotangent:n | point | lagrangian-triple:... | power:...")
        ->required();
    vr->add_option("--out", out_path, "write the JSON report to a file");

    auto* ps = app.add_subcommand("psm", "discrete boundary fields: integrate, classify, linearize");
    ps->add_option("--input", input, "bivector JSON file")->required();
    ps->add_option("--eta", eta_path, "eta samples JSON (N rows of n rationals)");
    ps->add_option("--x0", x0_str, "start point as a JSON array of rationals");
    ps->add_option("--grid", grid, "number of intervals N")->check(CLI::Range(1, 64));
    ps->add_option("--samples", samples, "number of random eta batches")->check(CLI::Range(1, 100));
    ps->add_option("--seed", seed, "random seed");
    ps->add_option("--out", out_path, "write the JSON report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cp->parsed()) return cmd_check_poisson(input, out_path);
        if (vr->parsed()) return cmd_verify_relational(example, out_path);
        if (ps->parsed()) return cmd_psm(input, eta_path, x0_str, grid, samples, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
