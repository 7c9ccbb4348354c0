#include "sympl/groupoid.hpp"

namespace sympl {

Mat LinearGroupoidInstance::fiber_product_basis() const { return fiber_power_basis(2); }

Mat LinearGroupoidInstance::fiber_power_basis(int n) const {
    int g = total.dim;
    Mat sys((n - 1) * base_dim, n * g);
    for (int k = 0; k + 1 < n; ++k)
        for (int r = 0; r < base_dim; ++r)
            for (int c = 0; c < g; ++c) {
                sys.at(k * base_dim + r, k * g + c) = s.at(r, c);
                sys.at(k * base_dim + r, (k + 1) * g + c) -= t.at(r, c);
            }
    return kernel(sys);
}

Mat LinearGroupoidInstance::chain_multiply_on(const Mat& chain_basis, int n) const {
    int g = total.dim;
    if (chain_basis.rows() != n * g)
        throw std::invalid_argument("chain_multiply_on: basis shape");
    Mat cur = chain_basis.submatrix((n - 1) * g, 0, g, chain_basis.cols());
    for (int k = n - 2; k >= 0; --k) {
        Mat pair = chain_basis.submatrix(k * g, 0, g, chain_basis.cols()).vcat(cur);
        cur = mu * pair;
    }
    return cur;
}

bool GroupoidReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const CheckEntry* GroupoidReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

LinearGroupoidInstance pair_groupoid(int n) {
    auto v = standard_space(n);
    int d = v.dim;
    LinearGroupoidInstance g;
    g.name = "pair:" + std::to_string(n);
    g.total = product(v, bar(v));
    g.base_dim = d;

    g.s = Mat(d, 2 * d); // s(x,y) = y
    g.t = Mat(d, 2 * d); // t(x,y) = x
    for (int i = 0; i < d; ++i) {
        g.s.at(i, d + i) = 1;
        g.t.at(i, i) = 1;
    }
    g.eps = Mat(2 * d, d); // x -> (x,x)
    for (int i = 0; i < d; ++i) {
        g.eps.at(i, i) = 1;
        g.eps.at(d + i, i) = 1;
    }
    g.inv = Mat(2 * d, 2 * d); // (x,y) -> (y,x)
    for (int i = 0; i < d; ++i) {
        g.inv.at(i, d + i) = 1;
        g.inv.at(d + i, i) = 1;
    }
    // mu((x,y),(y',z)) := (x,z) as a full-space formula
    g.mu = Mat(2 * d, 4 * d);
    for (int i = 0; i < d; ++i) {
        g.mu.at(i, i) = 1;             // x from the first factor
        g.mu.at(d + i, 3 * d + i) = 1; // z from the second factor
    }
    return g;
}

LinearGroupoidInstance cotangent_fiber_groupoid(int n) {
    auto sp = standard_space(n);
    int d = 2 * n;
    LinearGroupoidInstance g;
    g.name = "cotangent:" + std::to_string(n);
    g.total = sp;
    g.base_dim = n;

    g.s = Mat(n, d);
    g.t = Mat(n, d);
    for (int i = 0; i < n; ++i) {
        g.s.at(i, i) = 1;
        g.t.at(i, i) = 1;
    }
    g.eps = Mat(d, n);
    for (int i = 0; i < n; ++i) g.eps.at(i, i) = 1;
    g.inv = Mat(d, d);
    for (int i = 0; i < n; ++i) {
        g.inv.at(i, i) = 1;
        g.inv.at(n + i, n + i) = -1;
    }
    // mu((x,p),(x',q)) := (x, p+q)
    g.mu = Mat(d, 2 * d);
    for (int i = 0; i < n; ++i) {
        g.mu.at(i, i) = 1;
        g.mu.at(n + i, n + i) = 1;
        g.mu.at(n + i, d + n + i) = 1;
    }
    return g;
}

namespace {
// map identity M1 = M2 restricted to the column span of `dom`
bool maps_equal_on(const Mat& m1, const Mat& m2, const Mat& dom) {
    return ((m1 - m2) * dom).is_zero();
}
} // namespace

GroupoidReport verify_groupoid_axioms(const LinearGroupoidInstance& g) {
    GroupoidReport rep;
    int gd = g.total.dim;
    int b = g.base_dim;
    auto add = [&rep](const std::string& id, bool pass, int ld = -1, int rd = -1,
                      const std::string& detail = "") {
        rep.checks.push_back({id, pass, ld, rd, detail});
    };

    add("surjective.s", rank(g.s) == b);
    add("surjective.t", rank(g.t) == b);

    // (A.1) s . eps = t . eps = id_M
    add("A.1", g.s * g.eps == Mat::identity(b) && g.t * g.eps == Mat::identity(b));

    Mat fp = g.fiber_product_basis();
    Mat pr1(gd, 2 * gd), pr2(gd, 2 * gd);
    for (int i = 0; i < gd; ++i) {
        pr1.at(i, i) = 1;
        pr2.at(i, gd + i) = 1;
    }
    // (A.2) on the fiber product: s(mu(g,h)) = s(h), t(mu(g,h)) = t(g)
    add("A.2", maps_equal_on(g.s * g.mu, g.s * pr2, fp) && maps_equal_on(g.t * g.mu, g.t * pr1, fp));

    // (A.3) mu(eps t x id) = mu(id x eps s) = id_G
    {
        Mat left = g.eps * g.t;
        Mat lift1 = left.vcat(Mat::identity(gd));              // g -> (eps t g, g)
        Mat lift2 = Mat::identity(gd).vcat(g.eps * g.s);       // g -> (g, eps s g)
        add("A.3", g.mu * lift1 == Mat::identity(gd) && g.mu * lift2 == Mat::identity(gd));
    }

    // (A.4) mu(id x inv) = eps . t  and  (A.5) mu(inv x id) = eps . s
    {
        Mat lift_r = Mat::identity(gd).vcat(g.inv);
        Mat lift_l = g.inv.vcat(Mat::identity(gd));
        add("A.4", g.mu * lift_r == g.eps * g.t);
        add("A.5", g.mu * lift_l == g.eps * g.s);
    }

    // (A.6) associativity on the triple fiber product
    {
        Mat fp3 = g.fiber_power_basis(3);
        Mat q1(gd, 3 * gd), q2(gd, 3 * gd), q3(gd, 3 * gd);
        for (int i = 0; i < gd; ++i) {
            q1.at(i, i) = 1;
            q2.at(i, gd + i) = 1;
            q3.at(i, 2 * gd + i) = 1;
        }
        Mat m12 = g.mu * q1.vcat(q2);       // mu(g,h)
        Mat left = g.mu * m12.vcat(q3);     // mu(mu(g,h),k)
        Mat m23 = g.mu * q2.vcat(q3);       // mu(h,k)
        Mat right = g.mu * q1.vcat(m23);    // mu(g,mu(h,k))
        add("A.6", ((left - right) * fp3).is_zero());
    }

    // inv is an antisymplectic involution
    add("inv.involution", g.inv * g.inv == Mat::identity(gd));
    add("inv.antisymplectic", is_antisymplectic_map(g.inv, g.total));

    // eps embeds the base into G
    add("eps.injective", rank(g.eps) == b);

    // Gr_mu Lagrangian in G x G x G-bar
    {
        Mat fp = g.fiber_product_basis();
        Mat graph = fp.vcat(g.mu * fp);
        auto triple = product(product(g.total, g.total), bar(g.total));
        Subspace gr(triple, graph);
        bool lag = is_lagrangian(gr);
        add("Gr_mu.lagrangian", lag, gr.dim(), (3 * gd) / 2);
    }

    return rep;
}

} // namespace sympl
