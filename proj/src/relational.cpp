#include "sympl/relational.hpp"

#include <sstream>

namespace sympl {

namespace {

Mat canonical_span(const Mat& m) {
    Mat t = m.transpose();
    int r = rref(t);
    return t.submatrix(0, 0, r, t.cols()).transpose();
}

bool spans_equal(const Mat& a, const Mat& b) {
    return canonical_span(a) == canonical_span(b);
}

// Annihilator rows of a raw column span: v in span iff N v = 0.
Mat span_annihilator(const Mat& basis) { return kernel(basis.transpose()).transpose(); }

} // namespace

std::vector<Rat> DerivedCore::project_M(const std::vector<Rat>& l) const {
    Mat sys = m_kernel.hcat(m_reps);
    auto sol = solve(sys, l);
    if (!sol) throw std::invalid_argument("project_M: vector not in L1");
    std::vector<Rat> out(m_reps.cols());
    for (int j = 0; j < m_reps.cols(); ++j) out[j] = (*sol)[m_kernel.cols() + j];
    return out;
}

RelationalGroupoidLinear point_groupoid() {
    auto pt = point_space();
    return RelationalGroupoidLinear("point", pt, Subspace::zero(pt), Mat(0, 0));
}

RelationalGroupoidLinear build_from_groupoid(const LinearGroupoidInstance& g) {
    auto rep = verify_groupoid_axioms(g);
    if (!rep.all_pass()) {
        std::ostringstream os;
        os << "build_from_groupoid: groupoid axioms fail for '" << g.name << "':";
        for (const auto& c : rep.checks)
            if (!c.pass) os << " " << c.id;
        throw std::invalid_argument(os.str());
    }
    Mat fp = g.fiber_product_basis();
    Mat graph = fp.vcat(g.inv * (g.mu * fp));
    auto triple = product(product(g.total, g.total), g.total);
    return RelationalGroupoidLinear(g.name, g.total, Subspace(triple, graph), g.inv);
}

RelationalGroupoidLinear lagrangian_triple(const SymplecticSpace& g, const Subspace& lag,
                                           const Mat& i) {
    if (!is_lagrangian(lag))
        throw std::invalid_argument("lagrangian_triple: the subspace is not Lagrangian");
    if (i.rows() != g.dim || i.cols() != g.dim)
        throw std::invalid_argument("lagrangian_triple: I shape mismatch");
    if (!(lag.image(i, g) == lag))
        throw std::invalid_argument("lagrangian_triple: I does not preserve the Lagrangian");
    Mat b = lag.basis();
    Mat z(g.dim, b.cols());
    Mat triple_basis = b.vcat(z).vcat(z).hcat(z.vcat(b).vcat(z)).hcat(z.vcat(z).vcat(b));
    auto amb = product(product(g, g), g);
    return RelationalGroupoidLinear("lagrangian-triple", g, Subspace(amb, triple_basis), i);
}

DerivedCore derive_core(const RelationalGroupoidLinear& rg) {
    DerivedCore core(rg.space);
    int gd = rg.space.dim;
    auto gg = product(rg.space, rg.space);
    core.L_rel = LinRel(2 * gd, gd, rg.L.basis());
    // L3 = I_rel . L_rel: I applied in the third slot.
    Mat twist = Mat::identity(gd).block_diag(Mat::identity(gd)).block_diag(rg.I);
    core.L3 = LinRel(2 * gd, gd, twist * rg.L.basis());
    // L_I: * -|-> G x G, graph {(v, I v)}.
    LinRel L_I(0, 2 * gd, Mat::identity(gd).vcat(rg.I));
    core.L1 = L_I.then(core.L3);
    // L2 = L3 . (L1 x Id)
    core.L2 = core.L1.times(LinRel::identity(gd)).then(core.L3);
    // C = range of L2 = L2 . G_rel
    core.C = Subspace(rg.space, core.L2.range_basis());
    // K = {v : (0, v) in L2}
    {
        Mat zero_first(2 * gd, gd);
        for (int i = 0; i < gd; ++i) zero_first.at(gd + i, i) = 1;
        Subspace slice =
            Subspace(gg, core.L2.graph).intersect(Subspace(gg, zero_first));
        Mat proj(gd, 2 * gd);
        for (int i = 0; i < gd; ++i) proj.at(i, gd + i) = 1;
        core.K = Subspace(rg.space, proj * slice.basis());
    }
    // M = L1 / (K cap L1)
    Subspace l1_sub(rg.space, core.L1.graph);
    core.m_kernel = core.K.intersect(l1_sub).basis();
    {
        Mat acc = core.m_kernel;
        std::vector<int> chosen;
        for (int j = 0; j < l1_sub.basis().cols() && rank(acc) < l1_sub.dim(); ++j) {
            Mat trial = acc.hcat(l1_sub.basis().select_cols({j}));
            if (rank(trial) > rank(acc)) {
                acc = trial;
                chosen.push_back(j);
            }
        }
        core.m_reps = l1_sub.basis().select_cols(chosen);
        core.dim_M = core.m_reps.cols();
    }
    // S and T: slices of the L3 graph with the l-slot restricted to L1,
    // pushed down to (c, [l]) coordinates in G + M.
    auto slice_to_gm = [&](int lslot) {
        Mat g3 = core.L3.graph; // coordinates (slot0, slot1, z)
        Mat ann = span_annihilator(l1_sub.basis());
        Mat cond(ann.rows(), 3 * gd);
        for (int r = 0; r < ann.rows(); ++r)
            for (int c = 0; c < gd; ++c) cond.at(r, lslot * gd + c) = ann.at(r, c);
        Mat restricted = g3 * kernel(cond * g3);
        int m = core.dim_M;
        Mat out(gd + m, restricted.cols());
        for (int j = 0; j < restricted.cols(); ++j) {
            std::vector<Rat> l(gd), c(gd);
            for (int i = 0; i < gd; ++i) {
                l[i] = restricted.at(lslot * gd + i, j);
                c[i] = restricted.at((1 - lslot) * gd + i, j);
            }
            auto cls = core.project_M(l);
            for (int i = 0; i < gd; ++i) out.at(i, j) = c[i];
            for (int i = 0; i < m; ++i) out.at(gd + i, j) = cls[i];
        }
        return canonical_span(out);
    };
    core.S_basis = slice_to_gm(0);
    core.T_basis = slice_to_gm(1);
    return core;
}

GroupoidReport verify_axioms(const RelationalGroupoidLinear& rg) {
    GroupoidReport rep;
    int gd = rg.space.dim;
    auto add = [&rep](const std::string& id, bool pass, int ld = -1, int rd = -1,
                      const std::string& detail = "") {
        rep.checks.push_back({id, pass, ld, rd, detail});
    };
    // equality checks carry both canonical bases in the report on failure
    auto add_eq = [&rep](const std::string& id, const Mat& lhs, const Mat& rhs) {
        Mat lc = canonical_span(lhs), rc = canonical_span(rhs);
        bool pass = lc == rc;
        rep.checks.push_back({id, pass, lc.cols(), rc.cols(),
                              pass ? "" : "lhs = " + lc.str() + " rhs = " + rc.str()});
    };
    auto g3 = product(product(rg.space, rg.space), rg.space);

    // Construction invariants of the triple.
    add("inv.I_involution", rg.I * rg.I == Mat::identity(gd));
    add("inv.I_antisymplectic", is_antisymplectic_map(rg.I, rg.space),
        -1, -1, is_antisymplectic_map(rg.I, rg.space) ? "" : "I^T omega I != -omega");
    {
        bool lag = is_lagrangian(Subspace(g3, rg.L.basis()));
        add("inv.L_lagrangian", lag, rg.L.dim(), (3 * gd) / 2);
    }

    // A.1: cyclic symmetry of L.
    {
        Mat sigma(3 * gd, 3 * gd); // (x,y,z) -> (y,z,x)
        for (int i = 0; i < gd; ++i) {
            sigma.at(i, gd + i) = 1;
            sigma.at(gd + i, 2 * gd + i) = 1;
            sigma.at(2 * gd + i, i) = 1;
        }
        add_eq("A.1", sigma * rg.L.basis(), rg.L.basis());
    }

    // A.2: I is an involution.
    add("A.2", rg.I * rg.I == Mat::identity(gd));

    auto core = derive_core(rg);

    // A.3: I_rel . L_rel = L-bar_rel . T-bar_rel . (I-bar_rel x I-bar_rel),
    // whose graph is the image of L under (x,y,z) -> (I y, I x, z).
    {
        Mat lhs = core.L3.graph;
        Mat swap_i(3 * gd, 3 * gd);
        for (int i = 0; i < gd; ++i)
            for (int j = 0; j < gd; ++j) {
                swap_i.at(i, gd + j) = rg.I.at(i, j);
                swap_i.at(gd + i, j) = rg.I.at(i, j);
            }
        for (int i = 0; i < gd; ++i) swap_i.at(2 * gd + i, 2 * gd + i) = 1;
        Mat rhs = swap_i * rg.L.basis();
        add_eq("A.3", lhs, rhs);
    }

    // A.4: L3 . (L3 x Id) = L3 . (Id x L3), both Lagrangian as relations
    // G^3 -|-> G, i.e. for the form -omega_{G^3} (+) omega_G.
    {
        LinRel left = core.L3.times(LinRel::identity(gd)).then(core.L3);
        LinRel right = LinRel::identity(gd).times(core.L3).then(core.L3);
        bool eq = left == right;
        auto amb = product(bar(g3), rg.space);
        bool lag = is_lagrangian(Subspace(amb, left.graph));
        add("A.4", eq && lag, rank(left.graph), rank(right.graph), lag ? "" : "composite not Lagrangian");
    }

    // A.5: L1 is Lagrangian in G.
    {
        bool lag = is_lagrangian(Subspace(rg.space, core.L1.graph));
        add("A.5", lag, rank(core.L1.graph), gd / 2);
    }

    // A.6: L3 . (L1 x L1) = L1.
    {
        LinRel both = core.L1.times(core.L1).then(core.L3);
        add_eq("A.6", both.graph, core.L1.graph);
    }

    // A.7: L2 is Lagrangian in G-bar x G.
    {
        auto amb = product(bar(rg.space), rg.space);
        bool lag = is_lagrangian(Subspace(amb, core.L2.graph));
        add("A.7", lag, rank(core.L2.graph), gd);
    }

    // Corollaries, each re-verified independently.
    // C.1: I-bar_rel . L3 = L3-bar . T-bar . (I-bar x I-bar).
    {
        Mat lhs = Mat::identity(gd).block_diag(Mat::identity(gd)).block_diag(rg.I) * core.L3.graph;
        Mat swap_i(3 * gd, 3 * gd);
        for (int i = 0; i < gd; ++i)
            for (int j = 0; j < gd; ++j) {
                swap_i.at(i, gd + j) = rg.I.at(i, j);
                swap_i.at(gd + i, j) = rg.I.at(i, j);
            }
        for (int i = 0; i < gd; ++i) swap_i.at(2 * gd + i, 2 * gd + i) = 1;
        add_eq("C.1", lhs, swap_i * core.L3.graph);
    }
    // C.2: I(L1) = L1.
    add_eq("C.2", rg.I * core.L1.graph, core.L1.graph);
    // C.3: L2 = L3 . (Id x L1).
    {
        LinRel other = LinRel::identity(gd).times(core.L1).then(core.L3);
        add_eq("C.3", other.graph, core.L2.graph);
    }
    // C.4-C.6: L2 leaves L1, L2, L3 invariant.
    add_eq("C.4", core.L1.then(core.L2).graph, core.L1.graph);
    add_eq("C.5", core.L2.then(core.L2).graph, core.L2.graph);
    add_eq("C.6", core.L3.then(core.L2).graph, core.L3.graph);
    // C.7: L2 is self-transposed.
    add_eq("C.7", core.L2.transpose().graph, core.L2.graph);
    // C.8: (I x I)(L2) = L2.
    add_eq("C.8", rg.I.block_diag(rg.I) * core.L2.graph, core.L2.graph);

    return rep;
}

GroupoidReport verify_regular(const RelationalGroupoidLinear& rg, const DerivedCore& core) {
    GroupoidReport rep;
    int gd = rg.space.dim;
    auto add = [&rep](const std::string& id, bool pass, int ld = -1, int rd = -1,
                      const std::string& detail = "") {
        rep.checks.push_back({id, pass, ld, rd, detail});
    };

    // A.8: C = L2 . G_rel is coisotropic.
    {
        auto cls = classify_subspace(core.C);
        bool ok = cls == SubspaceClass::coisotropic || cls == SubspaceClass::lagrangian;
        add("A.8.C_coisotropic", ok, core.C.dim(), -1, to_string(cls));
    }
    // Corollary: C* = G* . L2, i.e. domain and range of L2 agree.
    add("A.8.cor.C_transpose", spans_equal(core.L2.domain_basis(), core.L2.range_basis()));
    // Corollary: L2 is an equivalence relation on C.
    {
        Mat diag = core.C.basis().vcat(core.C.basis());
        Subspace l2_graph(product(rg.space, rg.space), core.L2.graph);
        bool refl = l2_graph.contains(Subspace(product(rg.space, rg.space), diag));
        add("A.8.cor.reflexive_on_C", refl);
        add("A.8.cor.symmetric", core.L2.transpose() == core.L2);
        add("A.8.cor.transitive", core.L2.then(core.L2) == core.L2);
    }
    // Corollary: the equivalence classes are the characteristic cosets,
    // i.e. K = C^omega (and K sits inside C).
    {
        Subspace chr = symplectic_orthogonal(core.C);
        bool eq = core.K == chr;
        add("A.8.cor.classes_are_characteristic", eq && core.C.contains(core.K), core.K.dim(),
            chr.dim());
    }
    // A.9: the reduction M = L1 / L2 is finite dimensional; report dim.
    add("A.9.M_finite", true, core.dim_M, -1, "dim M = " + std::to_string(core.dim_M));
    // A.10: S and T are well-defined subspaces of G x M.
    {
        bool s_ok = core.S_basis.rows() == gd + core.dim_M;
        bool t_ok = core.T_basis.rows() == gd + core.dim_M;
        add("A.10.S", s_ok, rank(core.S_basis), -1);
        add("A.10.cor.T", t_ok, rank(core.T_basis), -1);
    }
    return rep;
}

namespace {

// Mixed coisotropy system: for W inside G + M and block bivector
// diag(lambda_g, pi) with pi unknown antisymmetric, the condition is
// N (lambda_g (+) pi) xi = 0 for every xi in Ann W, where N annihilates W.
// Returns the linear system rows over the pi unknowns (i<j flattened)
// together with the constant column.
struct PiSystem {
    Mat lhs;              // rows x n_unknowns
    std::vector<Rat> rhs; // rows
};

PiSystem mixed_coisotropy_system(const Mat& w_basis, const Mat& lambda_g, int gd, int m) {
    Mat ann = kernel(w_basis.transpose()); // columns xi with xi^T W = 0
    Mat nrows = ann.transpose();           // N v = 0 iff v in W
    int unknowns = m * (m - 1) / 2;
    auto uidx = [m](int i, int j) {
        // index of (i,j), i < j, in row-major upper triangle
        return i * (2 * m - i - 1) / 2 + (j - i - 1);
    };
    PiSystem sys;
    sys.lhs = Mat(ann.cols() * nrows.rows(), unknowns);
    sys.rhs.assign(ann.cols() * nrows.rows(), Rat(0));
    for (int a = 0; a < ann.cols(); ++a) {
        std::vector<Rat> xi_g(gd), xi_m(m);
        for (int i = 0; i < gd; ++i) xi_g[i] = ann.at(i, a);
        for (int i = 0; i < m; ++i) xi_m[i] = ann.at(gd + i, a);
        std::vector<Rat> vg = mat_vec(lambda_g, xi_g);
        for (int r = 0; r < nrows.rows(); ++r) {
            int row = a * nrows.rows() + r;
            // constant part: N_g . (lambda_g xi_g)
            Rat c(0);
            for (int i = 0; i < gd; ++i) c += nrows.at(r, i) * vg[i];
            sys.rhs[row] = -c;
            // pi part: N_m . (pi xi_m); (pi xi)_i = sum_{j>i} pi_ij xi_j - sum_{j<i} pi_ji xi_j
            for (int i = 0; i < m; ++i) {
                const Rat& ni = nrows.at(r, gd + i);
                if (ni == 0) continue;
                for (int j = 0; j < m; ++j) {
                    if (j == i || xi_m[j] == 0) continue;
                    if (i < j)
                        sys.lhs.at(row, uidx(i, j)) += ni * xi_m[j];
                    else
                        sys.lhs.at(row, uidx(j, i)) -= ni * xi_m[j];
                }
            }
        }
    }
    return sys;
}

Mat pi_from_flat(const std::vector<Rat>& u, int m) {
    Mat pi(m, m);
    int k = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++k) {
            pi.at(i, j) = u[k];
            pi.at(j, i) = -u[k];
        }
    return pi;
}

} // namespace

InducedPoisson induced_poisson(const RelationalGroupoidLinear& rg, const DerivedCore& core) {
    InducedPoisson out;
    int gd = rg.space.dim;
    int m = core.dim_M;
    auto om_inv = inverse(rg.space.omega);
    if (!om_inv && gd > 0) throw std::invalid_argument("induced_poisson: degenerate omega");
    Mat lam_s = gd > 0 ? -(*om_inv) : Mat(0, 0); // bivector of (G, omega)
    Mat lam_t = gd > 0 ? *om_inv : Mat(0, 0);    // T sits over G-bar

    PiSystem ssys = mixed_coisotropy_system(core.S_basis, lam_s, gd, m);
    auto part = solve(ssys.lhs, ssys.rhs);
    if (!part) {
        out.solvable = false;
        out.detail = "no antisymmetric pi makes S coisotropic (conjecture counterexample candidate; "
                     "inconsistent system with " + std::to_string(ssys.lhs.rows()) + " equations in " +
                     std::to_string(ssys.lhs.cols()) + " unknowns)";
        return out;
    }
    out.solvable = true;
    Mat hom = kernel(ssys.lhs);
    out.freedom = hom.cols();
    out.unique = hom.cols() == 0;
    out.pi = pi_from_flat(*part, m);

    // Cross-check on T: same particular solution and same homogeneous space.
    PiSystem tsys = mixed_coisotropy_system(core.T_basis, lam_t, gd, m);
    bool t_part_ok = true;
    std::vector<Rat> resid = mat_vec(tsys.lhs, *part);
    for (size_t i = 0; i < resid.size(); ++i)
        if (resid[i] != tsys.rhs[i]) { t_part_ok = false; break; }
    bool t_hom_ok = spans_equal(kernel(tsys.lhs), hom);
    out.t_consistent = t_part_ok && t_hom_ok;
    return out;
}

std::string to_string(MorphismLevel l) {
    switch (l) {
        case MorphismLevel::not_morphism: return "not_morphism";
        case MorphismLevel::morphism: return "morphism";
        case MorphismLevel::equivalence: return "equivalence";
    }
    return "?";
}

MorphismLevel check_morphism(const CanonicalRelation& f, const RelationalGroupoidLinear& g,
                             const RelationalGroupoidLinear& h) {
    if (f.source().dim != g.space.dim || f.target().dim != h.space.dim)
        throw std::invalid_argument("check_morphism: F does not relate the two spaces");
    // 1. Lagrangian graph: certified by the CanonicalRelation invariant,
    //    re-verified here against the groupoids' own forms.
    Mat om = (-g.space.omega).block_diag(h.space.omega);
    const Mat& graph = f.graph_basis();
    bool lag = 2 * graph.cols() == g.space.dim + h.space.dim &&
               (graph.transpose() * om * graph).is_zero();
    if (!lag) return MorphismLevel::not_morphism;

    // 2. F . I_g = I_h . F, as subspaces: (I_g x I_h)(F) = F.
    Mat conj = g.I.block_diag(h.I) * graph;
    if (!spans_equal(conj, graph)) return MorphismLevel::not_morphism;

    // 3. F^3(L_g) = L_h.
    LinRel frel = f.rel();
    LinRel f3 = frel.times(frel).times(frel);
    auto h3 = product(product(h.space, h.space), h.space);
    auto g3 = product(product(g.space, g.space), g.space);
    Subspace image = rel_image(f3, g.L, h3);
    if (!(image == h.L)) return MorphismLevel::not_morphism;

    // Equivalence: the transpose is also a morphism.
    LinRel ft = frel.transpose();
    Subspace back = rel_image(ft.times(ft).times(ft), h.L, g3);
    if (back == g.L) return MorphismLevel::equivalence;
    return MorphismLevel::morphism;
}

} // namespace sympl
