#include <doctest.h>

#include "sympl/groupoid.hpp"
#include "sympl/psm.hpp"
#include "sympl/rng.hpp"

using namespace sympl;

namespace {

std::vector<std::vector<Rat>> random_eta(RatRng& rng, int N, int n) {
    std::vector<std::vector<Rat>> eta;
    for (int k = 0; k < N; ++k) eta.push_back(rng.rat_vec(n));
    return eta;
}

PolyBivector witness3() {
    PolyBivector w(3);
    w.set_entry(0, 1, Polynomial::variable(3, 1));
    w.set_entry(0, 2, Polynomial::variable(3, 2));
    w.set_entry(1, 2, Polynomial::constant(3, Rat(1)));
    return w;
}

bool coiso(const LinearizedConstraint& lin) {
    return lin.classification == SubspaceClass::coisotropic ||
           lin.classification == SubspaceClass::lagrangian;
}

} // namespace

TEST_CASE("integrate_apath basics") {
    SUBCASE("zero bivector keeps X constant") {
        auto z = PolyBivector::zero(2);
        RatRng rng(1);
        auto f = integrate_apath(z, {Rat(1), rat(1, 2)}, random_eta(rng, 4, 2));
        for (int k = 0; k <= 4; ++k) CHECK(f.x[k] == f.x[0]);
        CHECK(apath_residual(f) == 0);
    }
    SUBCASE("constant bivector, unit density, straight line") {
        PolyBivector pi(2);
        pi.set_entry(0, 1, Polynomial::constant(2, Rat(1)));
        int N = 4;
        std::vector<std::vector<Rat>> eta(N, {Rat(0), Rat(1)});
        auto f = integrate_apath(pi, {Rat(0), Rat(0)}, eta);
        for (int k = 0; k <= N; ++k) {
            CHECK(f.x[k][0] == rat(k, N));
            CHECK(f.x[k][1] == 0);
        }
    }
    SUBCASE("zero eta keeps X constant") {
        auto so3 = PolyBivector::so3_dual();
        std::vector<std::vector<Rat>> eta(4, std::vector<Rat>(3, Rat(0)));
        auto f = integrate_apath(so3, {Rat(1), Rat(2), Rat(3)}, eta);
        for (int k = 0; k <= 4; ++k) CHECK(f.x[k] == f.x[0]);
    }
}

TEST_CASE("residual detects broken fields") {
    auto so3 = PolyBivector::so3_dual();
    RatRng rng(2);
    auto f = integrate_apath(so3, rng.rat_vec(3), random_eta(rng, 4, 3));
    CHECK(apath_residual(f) == 0);
    f.x[2][1] += 1;
    CHECK(apath_residual(f) >= 1); // two adjacent constraints break, by at least the bump
}

TEST_CASE("concat and invert") {
    auto so3 = PolyBivector::so3_dual();
    RatRng rng(3);
    auto x0 = rng.rat_vec(3);
    auto f1 = integrate_apath(so3, x0, random_eta(rng, 4, 3));
    auto f2 = integrate_apath(so3, f1.x[4], random_eta(rng, 4, 3));
    auto glued = concat(f1, f2);
    CHECK(glued.N == 8);
    CHECK(apath_residual(glued) == 0); // the constraint is local
    CHECK(glued.x[0] == f1.x[0]);
    CHECK(glued.x[8] == f2.x[4]);

    auto inv2 = invert(invert(f1));
    CHECK(inv2.x == f1.x);
    CHECK(inv2.eta == f1.eta);

    auto f3 = integrate_apath(so3, rng.rat_vec(3), random_eta(rng, 4, 3));
    CHECK_THROWS_AS(concat(f1, f3), std::invalid_argument); // endpoints mismatch (generic)
}

TEST_CASE("inversion preserves the constraint for constant bivectors") {
    PolyBivector pi(2);
    pi.set_entry(0, 1, Polynomial::constant(2, Rat(1)));
    RatRng rng(4);
    auto f = integrate_apath(pi, rng.rat_vec(2), random_eta(rng, 4, 2));
    CHECK(apath_residual(invert(f)) == 0);
}

TEST_CASE("linearized constraint space: zero bivector is coisotropic") {
    RatRng rng(5);
    for (int n : {2, 3})
        for (int N : {4, 8}) {
            auto f = integrate_apath(PolyBivector::zero(n), rng.rat_vec(n), random_eta(rng, N, n));
            auto lin = linearized_constraint_space(f);
            INFO("zero bivector n=", n, " N=", N);
            CHECK(coiso(lin));
            CHECK(lin.tangent.dim() == n * N + n);
            CHECK(lin.defect == 0);
        }
}

TEST_CASE("linearized constraint space: constant nondegenerate is coisotropic") {
    RatRng rng(6);
    for (int N : {4, 8}) {
        for (int t = 0; t < 3; ++t) {
            Mat c(2, 2);
            Rat v = rng.small_rat();
            if (v == 0) v = 1;
            c.at(0, 1) = v;
            c.at(1, 0) = -v;
            auto pi = PolyBivector::constant(c);
            auto f = integrate_apath(pi, rng.rat_vec(2), random_eta(rng, N, 2));
            auto lin = linearized_constraint_space(f);
            INFO("constant bivector N=", N);
            CHECK(coiso(lin));
        }
    }
}

TEST_CASE("linearized constraint space: non-Poisson witness fails at a generic field") {
    RatRng rng(7);
    bool some_fail = false;
    for (int t = 0; t < 3; ++t) {
        auto f = integrate_apath(witness3(), rng.rat_vec(3), random_eta(rng, 4, 3));
        auto lin = linearized_constraint_space(f);
        if (!coiso(lin)) some_fail = true;
    }
    CHECK(some_fail);
}

TEST_CASE("linearized constraint space rejects broken fields") {
    auto so3 = PolyBivector::so3_dual();
    RatRng rng(8);
    auto f = integrate_apath(so3, rng.rat_vec(3), random_eta(rng, 4, 3));
    f.x[1][0] += 1;
    CHECK_THROWS_AS(linearized_constraint_space(f), std::invalid_argument);
}

TEST_CASE("path classes: zero bivector matches the cotangent fiber groupoid") {
    int n = 2;
    auto z = PolyBivector::zero(n);
    auto zoo = cotangent_fiber_groupoid(n);
    RatRng rng(9);
    for (int t = 0; t < 20; ++t) {
        auto x0 = rng.rat_vec(n);
        auto f1 = integrate_apath(z, x0, random_eta(rng, 4, n));
        auto f2 = integrate_apath(z, x0, random_eta(rng, 4, n));
        auto c1 = classify_path(f1), c2 = classify_path(f2);
        auto composed = class_compose(c1, c2);

        // zoo element (x, p): mu((x,p),(x,q)) = (x, p+q)
        std::vector<Rat> g1 = x0, g2 = x0;
        g1.insert(g1.end(), c1.data.begin(), c1.data.end());
        g2.insert(g2.end(), c2.data.begin(), c2.data.end());
        std::vector<Rat> pair_vec = g1;
        pair_vec.insert(pair_vec.end(), g2.begin(), g2.end());
        auto mu = mat_vec(zoo.mu, pair_vec);
        std::vector<Rat> expect = composed.base;
        expect.insert(expect.end(), composed.data.begin(), composed.data.end());
        CHECK(mu == expect);

        // inversion matches iota
        auto ci = class_invert(c1);
        auto iota = mat_vec(zoo.inv, g1);
        std::vector<Rat> expect_inv = ci.base;
        expect_inv.insert(expect_inv.end(), ci.data.begin(), ci.data.end());
        CHECK(iota == expect_inv);

        // classify is stable under refinement and trivial concatenation
        CHECK(classify_path(refine(f1)) == c1);
    }
}

TEST_CASE("path classes: constant nondegenerate bivector matches the pair groupoid") {
    PolyBivector pi(2);
    pi.set_entry(0, 1, Polynomial::constant(2, Rat(1)));
    auto zoo = pair_groupoid(1);
    RatRng rng(10);
    for (int t = 0; t < 20; ++t) {
        auto f1 = integrate_apath(pi, rng.rat_vec(2), random_eta(rng, 4, 2));
        auto f2 = integrate_apath(pi, f1.x[4], random_eta(rng, 4, 2));
        auto c1 = classify_path(f1), c2 = classify_path(f2);
        auto composed = class_compose(c1, c2);
        CHECK(composed.base == f1.x[0]);
        CHECK(composed.data == f2.x[4]);

        // identify class (start, end) with the pair-groupoid element (start, end)
        std::vector<Rat> g1 = c1.base;
        g1.insert(g1.end(), c1.data.begin(), c1.data.end());
        std::vector<Rat> g2 = c2.base;
        g2.insert(g2.end(), c2.data.begin(), c2.data.end());
        std::vector<Rat> pair_vec = g1;
        pair_vec.insert(pair_vec.end(), g2.begin(), g2.end());
        auto mu = mat_vec(zoo.mu, pair_vec);
        std::vector<Rat> expect = composed.base;
        expect.insert(expect.end(), composed.data.begin(), composed.data.end());
        CHECK(mu == expect);

        // concat realizes the composition on actual fields
        CHECK(classify_path(concat(f1, f2)) == composed);
        // invert matches iota and is an involution on classes
        CHECK(class_invert(class_invert(c1)) == c1);
        CHECK(classify_path(invert(f1)) == class_invert(c1));
        // refinement stability
        CHECK(classify_path(refine(f1)) == c1);
    }
}

TEST_CASE("concat with the trivial path fixes the class") {
    PolyBivector pi(2);
    pi.set_entry(0, 1, Polynomial::constant(2, Rat(1)));
    RatRng rng(13);
    auto f = integrate_apath(pi, rng.rat_vec(2), random_eta(rng, 4, 2));
    std::vector<std::vector<Rat>> zero_eta(4, std::vector<Rat>(2, Rat(0)));
    auto triv = integrate_apath(pi, f.x[4], zero_eta);
    CHECK(classify_path(concat(f, triv)) == classify_path(f));

    auto z = PolyBivector::zero(3);
    auto fz = integrate_apath(z, rng.rat_vec(3), random_eta(rng, 4, 3));
    std::vector<std::vector<Rat>> zero3(4, std::vector<Rat>(3, Rat(0)));
    auto trivz = integrate_apath(z, fz.x[4], zero3);
    CHECK(classify_path(concat(fz, trivz)) == classify_path(fz));
}

TEST_CASE("zero bivector with nonconstant X has residual equal to the largest step") {
    auto z = PolyBivector::zero(2);
    std::vector<std::vector<Rat>> x{{Rat(0), Rat(0)}, {rat(1, 3), Rat(0)}, {rat(1, 3), Rat(1)}};
    std::vector<std::vector<Rat>> eta(2, std::vector<Rat>(2, Rat(0)));
    DiscretizedBoundaryField f(z, 2, x, eta);
    CHECK(apath_residual(f) == Rat(1));
}

TEST_CASE("class composition is associative where defined") {
    auto z = PolyBivector::zero(3);
    RatRng rng(11);
    auto x0 = rng.rat_vec(3);
    auto c1 = classify_path(integrate_apath(z, x0, random_eta(rng, 4, 3)));
    auto c2 = classify_path(integrate_apath(z, x0, random_eta(rng, 4, 3)));
    auto c3 = classify_path(integrate_apath(z, x0, random_eta(rng, 4, 3)));
    CHECK(class_compose(class_compose(c1, c2), c3) == class_compose(c1, class_compose(c2, c3)));
}

TEST_CASE("unsupported bivector kinds are rejected by classify_path") {
    auto so3 = PolyBivector::so3_dual();
    RatRng rng(12);
    auto f = integrate_apath(so3, rng.rat_vec(3), random_eta(rng, 4, 3));
    CHECK_THROWS_AS(classify_path(f), std::invalid_argument);
    // constant but degenerate: also unsupported
    Mat c(3, 3);
    c.at(0, 1) = 1;
    c.at(1, 0) = -1;
    auto cpi = PolyBivector::constant(c);
    auto g = integrate_apath(cpi, rng.rat_vec(3), random_eta(rng, 4, 3));
    CHECK_THROWS_AS(classify_path(g), std::invalid_argument);
}
