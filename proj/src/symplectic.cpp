#include "sympl/symplectic.hpp"

namespace sympl {

SymplecticSpace::SymplecticSpace(int dim_, Mat omega_) : dim(dim_), omega(std::move(omega_)) {
    if (dim < 0 || dim % 2 != 0)
        throw std::invalid_argument("SymplecticSpace: dimension must be even and nonnegative");
    if (omega.rows() != dim || omega.cols() != dim)
        throw std::invalid_argument("SymplecticSpace: form shape mismatch");
    if (omega.transpose() != -omega)
        throw std::invalid_argument("SymplecticSpace: form is not antisymmetric");
    if (rank(omega) != dim)
        throw std::invalid_argument("SymplecticSpace: form is degenerate");
}

Rat SymplecticSpace::form(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    auto ov = mat_vec(omega, v);
    Rat s(0);
    for (int i = 0; i < dim; ++i) s += u[i] * ov[i];
    return s;
}

SymplecticSpace standard_space(int n) {
    if (n < 1) throw std::invalid_argument("standard_space: n must be positive");
    Mat om(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        om.at(i, n + i) = 1;
        om.at(n + i, i) = -1;
    }
    return SymplecticSpace(2 * n, om);
}

SymplecticSpace point_space() { return SymplecticSpace(0, Mat(0, 0)); }

SymplecticSpace bar(const SymplecticSpace& s) { return SymplecticSpace(s.dim, -s.omega); }

SymplecticSpace product(const SymplecticSpace& a, const SymplecticSpace& b) {
    return SymplecticSpace(a.dim + b.dim, a.omega.block_diag(b.omega));
}

std::string to_string(SubspaceClass c) {
    switch (c) {
        case SubspaceClass::isotropic: return "isotropic";
        case SubspaceClass::coisotropic: return "coisotropic";
        case SubspaceClass::lagrangian: return "lagrangian";
        case SubspaceClass::symplectic: return "symplectic";
        case SubspaceClass::generic: return "generic";
    }
    return "?";
}

namespace {
// Reduced column echelon form: canonical basis of the column span.
Mat rcef(const Mat& m) {
    Mat t = m.transpose();
    std::vector<int> piv;
    int r = rref(t, &piv);
    return t.submatrix(0, 0, r, t.cols()).transpose();
}
} // namespace

Subspace::Subspace(SymplecticSpace ambient, const Mat& basis)
    : ambient_(std::move(ambient)), basis_(0, 0) {
    if (basis.rows() != ambient_.dim)
        throw std::invalid_argument("Subspace: basis rows != ambient dim");
    basis_ = rcef(basis);
}

Subspace Subspace::zero(const SymplecticSpace& ambient) {
    return Subspace(ambient, Mat(ambient.dim, 0));
}

Subspace Subspace::full(const SymplecticSpace& ambient) {
    return Subspace(ambient, Mat::identity(ambient.dim));
}

Subspace Subspace::span_of(const SymplecticSpace& ambient, const std::vector<std::vector<Rat>>& vecs) {
    Mat b(ambient.dim, static_cast<int>(vecs.size()));
    for (int j = 0; j < static_cast<int>(vecs.size()); ++j) {
        if (static_cast<int>(vecs[j].size()) != ambient.dim)
            throw std::invalid_argument("span_of: vector size mismatch");
        b.set_col(j, vecs[j]);
    }
    return Subspace(ambient, b);
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    Mat b = basis_;
    int r0 = b.cols() == 0 ? 0 : rank(b);
    Mat withv(ambient_.dim, b.cols() + 1);
    for (int j = 0; j < b.cols(); ++j) withv.set_col(j, b.col(j));
    withv.set_col(b.cols(), v);
    return rank(withv) == r0;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim())
        throw std::invalid_argument("contains: ambient mismatch");
    Mat joint = basis_.hcat(other.basis_);
    return rank(joint) == dim();
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_dim() == o.ambient_dim() && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_dim() != ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    return Subspace(ambient_, basis_.hcat(o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    if (o.ambient_dim() != ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    if (dim() == 0 || o.dim() == 0) return Subspace::zero(ambient_);
    // Solve B1 a = B2 b; intersection vectors are B1 a.
    Mat sys = basis_.hcat(-o.basis_);
    Mat ker = kernel(sys);
    Mat vecs(ambient_.dim, ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        std::vector<Rat> a(dim());
        for (int i = 0; i < dim(); ++i) a[i] = ker.at(i, j);
        vecs.set_col(j, mat_vec(basis_, a));
    }
    return Subspace(ambient_, vecs);
}

Subspace Subspace::image(const Mat& map, const SymplecticSpace& target) const {
    if (map.cols() != ambient_.dim || map.rows() != target.dim)
        throw std::invalid_argument("image: map shape mismatch");
    return Subspace(target, map * basis_);
}

Subspace symplectic_orthogonal(const Subspace& w) {
    // v in W^omega iff (B^T Omega) v = 0.
    Mat sys = w.basis().transpose() * w.ambient().omega;
    return Subspace(w.ambient(), kernel(sys));
}

SubspaceClass classify_subspace(const Subspace& w) {
    Subspace orth = symplectic_orthogonal(w);
    bool w_in_orth = orth.contains(w);
    bool orth_in_w = w.contains(orth);
    if (w_in_orth && orth_in_w) return SubspaceClass::lagrangian;
    if (orth_in_w) return SubspaceClass::coisotropic;
    if (w_in_orth) return SubspaceClass::isotropic;
    if (w.intersect(orth).dim() == 0) return SubspaceClass::symplectic;
    return SubspaceClass::generic;
}

bool is_lagrangian(const Subspace& w) {
    if (2 * w.dim() != w.ambient_dim()) return false;
    Mat g = w.basis();
    return (g.transpose() * w.ambient().omega * g).is_zero();
}

std::vector<Rat> Reduction::project(const std::vector<Rat>& v) const {
    Mat sys = characteristic.hcat(representatives);
    auto sol = solve(sys, v);
    if (!sol) throw std::invalid_argument("Reduction::project: vector not in the coisotropic subspace");
    std::vector<Rat> out(representatives.cols());
    for (int j = 0; j < representatives.cols(); ++j) out[j] = (*sol)[characteristic.cols() + j];
    return out;
}

Reduction reduce_coisotropic(const Subspace& c) {
    SubspaceClass cls = classify_subspace(c);
    if (cls != SubspaceClass::coisotropic && cls != SubspaceClass::lagrangian)
        throw std::invalid_argument("reduce_coisotropic: subspace is not coisotropic (got " +
                                    to_string(cls) + ")");
    Subspace ch = symplectic_orthogonal(c);
    // Extend the characteristic basis to a basis of C by greedily adding
    // columns of C's canonical basis that raise the rank.
    Mat acc = ch.basis();
    std::vector<int> chosen;
    int want = c.dim();
    for (int j = 0; j < c.basis().cols() && rank(acc) < want; ++j) {
        Mat trial = acc.hcat(c.basis().select_cols({j}));
        if (rank(trial) > rank(acc)) {
            acc = trial;
            chosen.push_back(j);
        }
    }
    Mat reps = c.basis().select_cols(chosen);
    int r = reps.cols();
    // Induced form on representatives; well-defined since omega(C^omega, C) = 0.
    Mat om_red = reps.transpose() * c.ambient().omega * reps;
    SymplecticSpace reduced(r, om_red); // validates antisymmetry + nondegeneracy
    return Reduction{reduced, ch.basis(), reps};
}

Mat reduction_projection_graph(const Subspace& c, const Reduction& red) {
    Mat graph(c.ambient_dim() + red.reduced.dim, c.dim());
    for (int j = 0; j < c.dim(); ++j) {
        auto v = c.basis().col(j);
        auto q = red.project(v);
        for (int i = 0; i < c.ambient_dim(); ++i) graph.at(i, j) = v[i];
        for (int i = 0; i < red.reduced.dim; ++i) graph.at(c.ambient_dim() + i, j) = q[i];
    }
    return graph;
}

Mat annihilator_rows(const Subspace& w) {
    // rows N with N v = 0 iff v in W: kernel of basis^T, transposed.
    return kernel(w.basis().transpose()).transpose();
}

} // namespace sympl
