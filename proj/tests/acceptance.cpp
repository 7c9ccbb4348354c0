// Acceptance suite: one line per criterion, nonzero exit iff any fail.
#include "sympl/json_io.hpp"
#include "sympl/power.hpp"
#include "sympl/psm.hpp"
#include "sympl/rng.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sympl;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Polynomial random_poly(RatRng& rng, int n) {
    Polynomial p(n);
    int terms = 1 + static_cast<int>(rng.next_u64() % 3);
    for (int t = 0; t < terms; ++t) {
        Polynomial::Exps e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = static_cast<uint32_t>(rng.next_u64() % 3);
        p.add_term(e, rng.small_rat());
    }
    return p;
}

PolyBivector random_constant_bivector(RatRng& rng, int n) {
    Mat c(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v = rng.small_rat();
            c.at(i, j) = v;
            c.at(j, i) = -v;
        }
    return PolyBivector::constant(c);
}

PolyBivector witness3() {
    PolyBivector w(3);
    w.set_entry(0, 1, Polynomial::variable(3, 1));
    w.set_entry(0, 2, Polynomial::variable(3, 2));
    w.set_entry(1, 2, Polynomial::constant(3, Rat(1)));
    return w;
}

std::vector<std::vector<Rat>> random_eta(RatRng& rng, int N, int n) {
    std::vector<std::vector<Rat>> eta;
    for (int k = 0; k < N; ++k) eta.push_back(rng.rat_vec(n));
    return eta;
}

bool coiso(const LinearizedConstraint& lin) {
    return lin.classification == SubspaceClass::coisotropic ||
           lin.classification == SubspaceClass::lagrangian;
}

void criterion1() {
    auto t0 = Clock::now();
    bool ok = true;
    RatRng rng(101);
    ok &= is_poisson(PolyBivector::zero(3));
    for (int t = 0; t < 5; ++t) ok &= is_poisson(random_constant_bivector(rng, 4));
    for (int t = 0; t < 5; ++t) {
        PolyBivector pi(2);
        pi.set_entry(0, 1, random_poly(rng, 2));
        ok &= is_poisson(pi);
    }
    auto so3 = PolyBivector::so3_dual();
    ok &= is_poisson(so3);
    for (int t = 0; t < 20; ++t) {
        auto f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 3);
        Polynomial cyc = poisson_bracket(so3, f, poisson_bracket(so3, g, h)) +
                         poisson_bracket(so3, g, poisson_bracket(so3, h, f)) +
                         poisson_bracket(so3, h, poisson_bracket(so3, f, g));
        ok &= cyc.is_zero();
    }
    double dt = seconds_since(t0);
    ok &= dt < 10.0;
    std::ostringstream note;
    note << "zero + 5 constants + 5 planar + so(3)*; 20 Jacobi triples; " << dt << " s";
    report(1, "Jacobi suite", ok, note.str());
}

void criterion2() {
    auto t0 = Clock::now();
    bool ok = true;
    RatRng rng(202);
    auto so3 = PolyBivector::so3_dual();
    for (int t = 0; t < 10; ++t) {
        auto f = random_poly(rng, 3), g = random_poly(rng, 3);
        ok &= koszul_bracket(so3, differential(f), differential(g)) ==
              differential(poisson_bracket(so3, f, g));
    }
    for (int i = 0; i < 3; ++i) {
        auto xi = AltTensor::of_function(Polynomial::variable(3, i));
        ok &= algebroid_differential(so3, algebroid_differential(so3, xi)).is_zero();
    }
    auto w = witness3();
    bool witness_detected = false;
    for (int i = 0; i < 3; ++i) {
        auto xi = AltTensor::of_function(Polynomial::variable(3, i));
        if (!algebroid_differential(w, algebroid_differential(w, xi)).is_zero())
            witness_detected = true;
    }
    ok &= witness_detected;
    double dt = seconds_since(t0);
    ok &= dt < 10.0;
    std::ostringstream note;
    note << "10 Koszul pairs; delta^2 = 0 on so(3)*; witness flagged; " << dt << " s";
    report(2, "Koszul/differential suite", ok, note.str());
}

void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::vector<std::pair<RelationalGroupoidLinear, int>> cases;
    for (int n : {1, 2}) {
        cases.emplace_back(build_from_groupoid(pair_groupoid(n)), 2 * n);
        cases.emplace_back(build_from_groupoid(cotangent_fiber_groupoid(n)), n);
    }
    for (auto& [rg, base_dim] : cases) {
        auto axioms = verify_axioms(rg);
        ok &= axioms.all_pass();
        auto core = derive_core(rg);
        auto regular = verify_regular(rg, core);
        ok &= regular.all_pass();
        ok &= core.dim_M == base_dim;
    }
    double dt = seconds_since(t0);
    ok &= dt < 60.0;
    std::ostringstream note;
    note << "pair:1 pair:2 cotangent:1 cotangent:2, A.1-A.7 + corollaries + A.8-A.10; " << dt << " s";
    report(3, "relational axiom suite", ok, note.str());
}

void criterion4() {
    bool ok = true;
    for (int n : {1, 2}) {
        auto rp = build_from_groupoid(pair_groupoid(n));
        auto ip = induced_poisson(rp, derive_core(rp));
        ok &= ip.solvable && ip.unique && ip.t_consistent;
        ok &= ip.pi == *inverse(standard_space(n).omega);

        auto rc = build_from_groupoid(cotangent_fiber_groupoid(n));
        auto ic = induced_poisson(rc, derive_core(rc));
        ok &= ic.solvable && ic.unique && ic.t_consistent;
        ok &= ic.pi.is_zero();
    }
    report(4, "conjecture explorer: unique induced Poisson structures", ok,
           "pair -> base omega^{-1}, cotangent -> 0");
}

void criterion5() {
    bool ok = true;
    auto g = standard_space(1);
    auto lag = Subspace::span_of(g, {{Rat(1), Rat(0)}});
    Mat flip{{1, 0}, {0, -1}};
    auto admissible = lagrangian_triple(g, lag, flip);
    ok &= verify_axioms(admissible).all_pass();
    ok &= check_morphism(lagrangian_as_relation(lag), point_groupoid(), admissible) ==
          MorphismLevel::equivalence;

    auto literal = lagrangian_triple(g, lag, Mat::identity(2));
    auto rep = verify_axioms(literal);
    const auto* anti = rep.find("inv.I_antisymplectic");
    ok &= anti != nullptr && !anti->pass;
    report(5, "Lagrangian-triple example", ok,
           "admissible I passes + equivalence to the point; literal I flagged");
}

void criterion6() {
    bool ok = true;
    for (int n : {2, 3}) {
        for (bool use_pair : {true, false}) {
            auto g = use_pair ? pair_groupoid(1) : cotangent_fiber_groupoid(1);
            auto pa = power_analysis(g, n);
            ok &= pa.g_n_class == SubspaceClass::coisotropic;
            ok &= pa.reduced_dim == g.total.dim;
            ok &= pa.reduced_matches_g;
            ok &= pa.p_identity && pa.p_projector;
            ok &= pa.power_axioms.all_pass() && pa.power_regular.all_pass();
        }
    }
    for (bool use_pair : {true, false}) {
        auto g = use_pair ? pair_groupoid(1) : cotangent_fiber_groupoid(1);
        auto f = power_equivalence(g, 2, 3);
        ok &= check_morphism(f, power_groupoid(g, 3), power_groupoid(g, 2)) ==
              MorphismLevel::equivalence;
    }
    report(6, "powers lemma", ok,
           "G_(n) coisotropic, reduction = G, P relations exact, P_2.P_3' equivalences");
}

void criterion7() {
    auto t0 = Clock::now();
    RatRng rng(707);
    bool zero_ok = true, const_ok = true, so3_ok = true, witness_fails = false;
    int so3_bad = 0, so3_total = 0;

    // zero bivector: n in {2,3} x N in {4,8}, 5 paths each combination split
    for (int n : {2, 3})
        for (int N : {4, 8})
            for (int t = 0; t < 3; ++t) {
                auto f = integrate_apath(PolyBivector::zero(n), rng.rat_vec(n), random_eta(rng, N, n));
                zero_ok &= coiso(linearized_constraint_space(f));
            }
    // constant nondegenerate: n = 2
    for (int N : {4, 8})
        for (int t = 0; t < 3; ++t) {
            Mat c(2, 2);
            Rat v = rng.small_rat();
            if (v == 0) v = 1;
            c.at(0, 1) = v;
            c.at(1, 0) = -v;
            auto f = integrate_apath(PolyBivector::constant(c), rng.rat_vec(2), random_eta(rng, N, 2));
            const_ok &= coiso(linearized_constraint_space(f));
        }
    // so(3)*: n = 3
    for (int N : {4, 8})
        for (int t = 0; t < 3; ++t) {
            auto f = integrate_apath(PolyBivector::so3_dual(), rng.rat_vec(3), random_eta(rng, N, 3));
            auto lin = linearized_constraint_space(f);
            ++so3_total;
            if (!coiso(lin)) ++so3_bad;
        }
    so3_ok = so3_bad == 0;
    // witness must fail at some sampled field
    for (int t = 0; t < 5; ++t) {
        auto f = integrate_apath(witness3(), rng.rat_vec(3), random_eta(rng, 4, 3));
        if (!coiso(linearized_constraint_space(f))) witness_fails = true;
    }
    double dt = seconds_since(t0);
    bool ok = zero_ok && const_ok && so3_ok && witness_fails && dt < 120.0;
    std::ostringstream note;
    note << "zero " << (zero_ok ? "coisotropic" : "FAILS") << "; constant "
         << (const_ok ? "coisotropic" : "FAILS") << "; so(3)* " << (so3_total - so3_bad) << "/"
         << so3_total << " coisotropic; witness " << (witness_fails ? "fails as required" : "DOES NOT FAIL")
         << "; " << dt << " s";
    report(7, "discrete boundary coisotropy", ok, note.str());
}

void criterion8() {
    bool ok = true;
    RatRng rng(808);
    // zero bivector vs cotangent fiber groupoid
    {
        int n = 2;
        auto z = PolyBivector::zero(n);
        auto zoo = cotangent_fiber_groupoid(n);
        for (int t = 0; t < 20; ++t) {
            auto x0 = rng.rat_vec(n);
            auto f1 = integrate_apath(z, x0, random_eta(rng, 4, n));
            auto f2 = integrate_apath(z, x0, random_eta(rng, 4, n));
            auto c1 = classify_path(f1), c2 = classify_path(f2);
            auto comp = class_compose(c1, c2);
            std::vector<Rat> g1 = c1.base, g2 = c2.base;
            g1.insert(g1.end(), c1.data.begin(), c1.data.end());
            g2.insert(g2.end(), c2.data.begin(), c2.data.end());
            std::vector<Rat> pair_vec = g1;
            pair_vec.insert(pair_vec.end(), g2.begin(), g2.end());
            std::vector<Rat> expect = comp.base;
            expect.insert(expect.end(), comp.data.begin(), comp.data.end());
            ok &= mat_vec(zoo.mu, pair_vec) == expect;
            ok &= classify_path(refine(f1)) == c1;
            ok &= classify_path(concat(f1, f2)) == comp;
        }
    }
    // constant nondegenerate vs pair groupoid
    {
        PolyBivector pi(2);
        pi.set_entry(0, 1, Polynomial::constant(2, Rat(1)));
        auto zoo = pair_groupoid(1);
        for (int t = 0; t < 20; ++t) {
            auto f1 = integrate_apath(pi, rng.rat_vec(2), random_eta(rng, 4, 2));
            auto f2 = integrate_apath(pi, f1.x[4], random_eta(rng, 4, 2));
            auto c1 = classify_path(f1), c2 = classify_path(f2);
            auto comp = class_compose(c1, c2);
            std::vector<Rat> g1 = c1.base, g2 = c2.base;
            g1.insert(g1.end(), c1.data.begin(), c1.data.end());
            g2.insert(g2.end(), c2.data.begin(), c2.data.end());
            std::vector<Rat> pair_vec = g1;
            pair_vec.insert(pair_vec.end(), g2.begin(), g2.end());
            std::vector<Rat> expect = comp.base;
            expect.insert(expect.end(), comp.data.begin(), comp.data.end());
            ok &= mat_vec(zoo.mu, pair_vec) == expect;
            ok &= mat_vec(zoo.inv, g1) ==
                  [&] {
                      auto ci = class_invert(c1);
                      std::vector<Rat> e = ci.base;
                      e.insert(e.end(), ci.data.begin(), ci.data.end());
                      return e;
                  }();
            ok &= classify_path(refine(f1)) == c1;
            ok &= classify_path(concat(f1, f2)) == comp;
        }
    }
    report(8, "path-class groupoid matches the zoo instances", ok,
           "20 composable samples each + N -> 2N stability");
}

void criterion9() {
    const char* cli = SYMPL_CLI_PATH;
    std::string dir = "acceptance_tmp";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        report(9, "CLI determinism", false, "cannot create temp dir");
        return;
    }
    // so(3)* bivector input
    {
        std::ofstream f(dir + "/so3.json");
        f << to_json(PolyBivector::so3_dual()).dump(2) << "\n";
    }
    auto run = [&](const std::string& out) {
        std::string cmd = std::string(cli) + " psm --input " + dir + "/so3.json --grid 4 --samples 2 --seed 42 --out " +
                          out + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    run(dir + "/a.json");
    run(dir + "/b.json");
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(dir + "/a.json"), b = slurp(dir + "/b.json");
    bool ok = !a.empty() && a == b;

    // determinism of the verify-relational report too
    auto rerun = [&](const std::string& out) {
        std::string cmd = std::string(cli) + " verify-relational --example pair:1 --out " + dir +
                          "/" + out + " 2>/dev/null";
        return std::system(cmd.c_str());
    };
    ok &= rerun("r1.json") == 0 && rerun("r2.json") == 0;
    ok &= !slurp(dir + "/r1.json").empty() && slurp(dir + "/r1.json") == slurp(dir + "/r2.json");
    report(9, "CLI determinism", ok, "fixed seed gives byte-identical reports");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
