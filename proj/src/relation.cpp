#include "sympl/relation.hpp"

namespace sympl {

namespace {
Mat canonical_span(const Mat& m) {
    Mat t = m.transpose();
    std::vector<int> piv;
    int r = rref(t, &piv);
    return t.submatrix(0, 0, r, t.cols()).transpose();
}
} // namespace

LinRel::LinRel(int s, int t, const Mat& g) : src_dim(s), tgt_dim(t), graph(canonical_span(g)) {
    if (g.rows() != s + t) throw std::invalid_argument("LinRel: graph rows != src + tgt");
}

LinRel LinRel::identity(int dim) {
    Mat g = Mat::identity(dim).vcat(Mat::identity(dim));
    return LinRel(dim, dim, g);
}

LinRel LinRel::of_map(const Mat& a) {
    if (a.rows() == 0 && a.cols() == 0) return LinRel(0, 0, Mat(0, 0));
    Mat g = Mat::identity(a.cols()).vcat(a);
    return LinRel(a.cols(), a.rows(), g);
}

LinRel LinRel::from_target_subspace(const Mat& basis, int tgt_dim) {
    if (basis.rows() != tgt_dim) throw std::invalid_argument("from_target_subspace: shape");
    return LinRel(0, tgt_dim, basis);
}

LinRel LinRel::transpose() const {
    Mat g(graph.rows(), graph.cols());
    for (int j = 0; j < graph.cols(); ++j) {
        for (int i = 0; i < tgt_dim; ++i) g.at(i, j) = graph.at(src_dim + i, j);
        for (int i = 0; i < src_dim; ++i) g.at(tgt_dim + i, j) = graph.at(i, j);
    }
    return LinRel(tgt_dim, src_dim, g);
}

LinRel LinRel::then(const LinRel& next) const {
    if (tgt_dim != next.src_dim)
        throw std::invalid_argument("LinRel::then: middle dimension mismatch");
    int k1 = graph.cols(), k2 = next.graph.cols();
    // Match the middle factor: B-part of this equals B-part of next.
    Mat mid(tgt_dim, k1 + k2);
    for (int j = 0; j < k1; ++j)
        for (int i = 0; i < tgt_dim; ++i) mid.at(i, j) = graph.at(src_dim + i, j);
    for (int j = 0; j < k2; ++j)
        for (int i = 0; i < tgt_dim; ++i) mid.at(i, k1 + j) = -next.graph.at(i, j);
    Mat ker = kernel(mid);
    Mat out(src_dim + next.tgt_dim, ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        for (int i = 0; i < src_dim; ++i) {
            Rat s(0);
            for (int c = 0; c < k1; ++c) s += graph.at(i, c) * ker.at(c, j);
            out.at(i, j) = s;
        }
        for (int i = 0; i < next.tgt_dim; ++i) {
            Rat s(0);
            for (int c = 0; c < k2; ++c) s += next.graph.at(next.src_dim + i, c) * ker.at(k1 + c, j);
            out.at(src_dim + i, j) = s;
        }
    }
    return LinRel(src_dim, next.tgt_dim, out);
}

LinRel LinRel::times(const LinRel& o) const {
    int s = src_dim + o.src_dim, t = tgt_dim + o.tgt_dim;
    Mat g(s + t, graph.cols() + o.graph.cols());
    for (int j = 0; j < graph.cols(); ++j) {
        for (int i = 0; i < src_dim; ++i) g.at(i, j) = graph.at(i, j);
        for (int i = 0; i < tgt_dim; ++i) g.at(s + i, j) = graph.at(src_dim + i, j);
    }
    for (int j = 0; j < o.graph.cols(); ++j) {
        for (int i = 0; i < o.src_dim; ++i) g.at(src_dim + i, graph.cols() + j) = o.graph.at(i, j);
        for (int i = 0; i < o.tgt_dim; ++i)
            g.at(s + tgt_dim + i, graph.cols() + j) = o.graph.at(o.src_dim + i, j);
    }
    return LinRel(s, t, g);
}

Mat LinRel::domain_basis() const { return canonical_span(graph.submatrix(0, 0, src_dim, graph.cols())); }

Mat LinRel::range_basis() const {
    return canonical_span(graph.submatrix(src_dim, 0, tgt_dim, graph.cols()));
}

bool LinRel::operator==(const LinRel& o) const {
    return src_dim == o.src_dim && tgt_dim == o.tgt_dim && graph == o.graph;
}

namespace {
void check_lagrangian_graph(const SymplecticSpace& src, const SymplecticSpace& tgt, const Mat& g,
                            const char* who) {
    Mat om = (-src.omega).block_diag(tgt.omega);
    if (2 * g.cols() != src.dim + tgt.dim)
        throw std::invalid_argument(std::string(who) + ": graph is not half-dimensional");
    if (!(g.transpose() * om * g).is_zero())
        throw std::invalid_argument(std::string(who) +
                                    ": the form -omega_src (+) omega_tgt does not vanish on the graph");
}
} // namespace

CanonicalRelation::CanonicalRelation(SymplecticSpace src, SymplecticSpace tgt, const Mat& graph_basis)
    : src_(std::move(src)), tgt_(std::move(tgt)), rel_(src_.dim, tgt_.dim, graph_basis) {
    check_lagrangian_graph(src_, tgt_, rel_.graph, "CanonicalRelation");
}

CanonicalRelation::CanonicalRelation(SymplecticSpace src, SymplecticSpace tgt, LinRel rel)
    : src_(std::move(src)), tgt_(std::move(tgt)), rel_(std::move(rel)) {
    if (rel_.src_dim != src_.dim || rel_.tgt_dim != tgt_.dim)
        throw std::invalid_argument("CanonicalRelation: dimension mismatch");
    check_lagrangian_graph(src_, tgt_, rel_.graph, "CanonicalRelation");
}

CanonicalRelation CanonicalRelation::transpose() const {
    return CanonicalRelation(tgt_, src_, rel_.transpose());
}

bool CanonicalRelation::operator==(const CanonicalRelation& o) const {
    return src_.dim == o.src_.dim && tgt_.dim == o.tgt_.dim && rel_ == o.rel_;
}

CanonicalRelation identity_relation(const SymplecticSpace& g) {
    return CanonicalRelation(g, g, LinRel::identity(g.dim));
}

bool is_symplectic_map(const Mat& a, const SymplecticSpace& g) {
    return a.rows() == g.dim && a.cols() == g.dim && a.transpose() * g.omega * a == g.omega;
}

bool is_antisymplectic_map(const Mat& a, const SymplecticSpace& g) {
    return a.rows() == g.dim && a.cols() == g.dim && a.transpose() * g.omega * a == -g.omega;
}

CanonicalRelation graph_of_map(const Mat& a, MapSign sign, const SymplecticSpace& g) {
    if (!inverse(a)) throw std::invalid_argument("graph_of_map: matrix is not invertible");
    if (sign == MapSign::symplectic) {
        if (!is_symplectic_map(a, g))
            throw std::invalid_argument("graph_of_map: A^T omega A != omega (not symplectic)");
        return CanonicalRelation(g, g, LinRel::of_map(a));
    }
    if (!is_antisymplectic_map(a, g))
        throw std::invalid_argument("graph_of_map: A^T omega A != -omega (not antisymplectic)");
    return CanonicalRelation(bar(g), g, LinRel::of_map(a));
}

CanonicalRelation compose(const CanonicalRelation& first, const CanonicalRelation& next) {
    if (first.target().dim != next.source().dim)
        throw std::invalid_argument("compose: target/source dimension mismatch");
    // Lagrangianity of the composite is a theorem in the linear category;
    // the constructor re-checks it as an assertion.
    return CanonicalRelation(first.source(), next.target(), first.rel().then(next.rel()));
}

CanonicalRelation rel_product(const CanonicalRelation& a, const CanonicalRelation& b) {
    return CanonicalRelation(product(a.source(), b.source()), product(a.target(), b.target()),
                             a.rel().times(b.rel()));
}

CanonicalRelation lagrangian_as_relation(const Subspace& lag) {
    if (!is_lagrangian(lag))
        throw std::invalid_argument("lagrangian_as_relation: subspace is not Lagrangian");
    return CanonicalRelation(point_space(), lag.ambient(),
                             LinRel::from_target_subspace(lag.basis(), lag.ambient_dim()));
}

Subspace rel_image(const LinRel& r, const Subspace& of_source, const SymplecticSpace& target) {
    if (of_source.ambient_dim() != r.src_dim || target.dim != r.tgt_dim)
        throw std::invalid_argument("rel_image: dimension mismatch");
    LinRel in = LinRel::from_target_subspace(of_source.basis(), r.src_dim);
    LinRel out = in.then(r);
    return Subspace(target, out.graph);
}

} // namespace sympl
