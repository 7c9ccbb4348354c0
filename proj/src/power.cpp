#include "sympl/power.hpp"

#include <stdexcept>

namespace sympl {

namespace {

SymplecticSpace nth_power_space(const SymplecticSpace& g, int n) {
    SymplecticSpace p = g;
    for (int k = 1; k < n; ++k) p = product(p, g);
    return p;
}

Mat canonical_span(const Mat& m) {
    Mat t = m.transpose();
    int r = rref(t);
    return t.submatrix(0, 0, r, t.cols()).transpose();
}

} // namespace

CanonicalRelation power_relation(const LinearGroupoidInstance& g, int n) {
    if (n < 1) throw std::invalid_argument("power_relation: n >= 1");
    Mat chain = g.fiber_power_basis(n);
    Mat mult = g.chain_multiply_on(chain, n);
    Mat graph = mult.vcat(chain);
    return CanonicalRelation(g.total, nth_power_space(g.total, n), graph);
}

RelationalGroupoidLinear power_groupoid(const LinearGroupoidInstance& g, int n) {
    if (n == 1) return build_from_groupoid(g);
    auto rep = verify_groupoid_axioms(g);
    if (!rep.all_pass()) throw std::invalid_argument("power_groupoid: base groupoid is broken");
    int gd = g.total.dim;
    auto gn_space = nth_power_space(g.total, n);

    // L = {(a, b, c) in G_(n)^3 : (m a, m b, m c) in L_base}
    auto base = build_from_groupoid(g);
    Mat chain = g.fiber_power_basis(n);
    Mat mult_on_chain = g.chain_multiply_on(chain, n);
    // Parametrize (a,b,c) by chain coefficients (u,v,w); the multiplication
    // images are linear in those, and membership in L_base is a kernel
    // condition on them.
    int k = chain.cols();
    Mat triple_mult(3 * gd, 3 * k);
    for (int r = 0; r < gd; ++r)
        for (int c = 0; c < k; ++c) {
            triple_mult.at(r, c) = mult_on_chain.at(r, c);
            triple_mult.at(gd + r, k + c) = mult_on_chain.at(r, c);
            triple_mult.at(2 * gd + r, 2 * k + c) = mult_on_chain.at(r, c);
        }
    Mat ann = kernel(base.L.basis().transpose()).transpose();
    Mat coeff_ker = kernel(ann * triple_mult);
    Mat triple_chain(3 * n * gd, 3 * k);
    for (int r = 0; r < n * gd; ++r)
        for (int c = 0; c < k; ++c) {
            triple_chain.at(r, c) = chain.at(r, c);
            triple_chain.at(n * gd + r, k + c) = chain.at(r, c);
            triple_chain.at(2 * n * gd + r, 2 * k + c) = chain.at(r, c);
        }
    Mat l_basis = triple_chain * coeff_ker;
    auto amb = product(product(gn_space, gn_space), gn_space);

    // I: reverse the chain and invert each slot.
    Mat i_n(n * gd, n * gd);
    for (int slot = 0; slot < n; ++slot)
        for (int r = 0; r < gd; ++r)
            for (int c = 0; c < gd; ++c)
                i_n.at(slot * gd + r, (n - 1 - slot) * gd + c) = g.inv.at(r, c);

    return RelationalGroupoidLinear(g.name + ":power" + std::to_string(n), gn_space,
                                    Subspace(amb, l_basis), i_n);
}

PowerAnalysis power_analysis(const LinearGroupoidInstance& g, int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("power_analysis: n in {2,3,4}");
    auto rep0 = verify_groupoid_axioms(g);
    if (!rep0.all_pass()) throw std::invalid_argument("power_analysis: base groupoid is broken");

    int gd = g.total.dim;
    auto gn_space = nth_power_space(g.total, n);
    Mat chain = g.fiber_power_basis(n);
    Subspace g_n(gn_space, chain);

    PowerAnalysis out(g_n, power_relation(g, n));
    out.n = n;
    out.g_n_class = classify_subspace(g_n);

    auto red = reduce_coisotropic(g_n);
    out.reduced_dim = red.reduced.dim;

    // The reduced form must be congruent to omega_G through the total
    // multiplication applied to the chosen representatives.
    {
        Mat phi = g.chain_multiply_on(red.representatives, n);
        out.reduced_matches_g = (phi.transpose() * g.total.omega * phi) == red.reduced.omega &&
                                rank(phi) == gd;
    }

    // P' . P = Gr(Id_G)
    {
        LinRel comp = out.P.rel().then(out.P.rel().transpose());
        out.p_identity = comp == LinRel::identity(gd);
    }
    // P . P' = {(a,b) in G_(n)^2 : [a] = [b]} = diag(G_(n)) + (0 x characteristic)
    {
        LinRel proj = out.P.rel().transpose().then(out.P.rel());
        Mat diag = chain.vcat(chain);
        Subspace chr = symplectic_orthogonal(g_n);
        Mat zk(n * gd, chr.dim());
        Mat want = diag.hcat(zk.vcat(chr.basis()));
        out.p_projector = canonical_span(proj.graph) == canonical_span(want);
    }

    auto pg = power_groupoid(g, n);
    out.power_axioms = verify_axioms(pg);
    auto core = derive_core(pg);
    out.power_regular = verify_regular(pg, core);
    return out;
}

CanonicalRelation power_equivalence(const LinearGroupoidInstance& g, int i, int j) {
    auto pi = power_relation(g, i);
    auto pj = power_relation(g, j);
    return compose(pj.transpose(), pi); // G^j -|-> G^i
}

} // namespace sympl
