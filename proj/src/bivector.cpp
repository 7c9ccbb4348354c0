#include "sympl/bivector.hpp"

#include <stdexcept>

namespace sympl {

PolyBivector PolyBivector::constant(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("PolyBivector::constant: not square");
    if (m.transpose() != -m) throw std::invalid_argument("PolyBivector::constant: not antisymmetric");
    PolyBivector pi(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != 0) pi.set_entry(i, j, Polynomial::constant(m.rows(), m.at(i, j)));
    return pi;
}

PolyBivector PolyBivector::so3_dual() {
    PolyBivector pi(3);
    pi.set_entry(0, 1, Polynomial::variable(3, 2));  // Pi^{12} = x3
    pi.set_entry(1, 2, Polynomial::variable(3, 0));  // Pi^{23} = x1
    pi.set_entry(0, 2, -Polynomial::variable(3, 1)); // Pi^{31} = x2
    return pi;
}

Polynomial PolyBivector::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("PolyBivector::entry: index");
    if (i == j) return Polynomial(dim_);
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    auto it = entries_.find(key);
    if (it == entries_.end()) return Polynomial(dim_);
    return i < j ? it->second : -it->second;
}

void PolyBivector::set_entry(int i, int j, const Polynomial& p) {
    if (!(0 <= i && i < j && j < dim_))
        throw std::invalid_argument("PolyBivector::set_entry: need 0 <= i < j < dim");
    if (p.n_vars() != dim_) throw std::invalid_argument("PolyBivector::set_entry: arity");
    if (p.is_zero())
        entries_.erase({i, j});
    else
        entries_[{i, j}] = p;
}

Mat PolyBivector::eval(const std::vector<Rat>& x) const {
    Mat m(dim_, dim_);
    for (const auto& [ij, p] : entries_) {
        Rat v = p.eval(x);
        m.at(ij.first, ij.second) = v;
        m.at(ij.second, ij.first) = -v;
    }
    return m;
}

int PolyBivector::max_degree() const {
    int d = -1;
    for (const auto& [ij, p] : entries_) d = std::max(d, p.total_degree());
    return d;
}

bool PolyBivector::operator==(const PolyBivector& o) const {
    return dim_ == o.dim_ && entries_ == o.entries_;
}

AltTensor jacobiator(const PolyBivector& pi) {
    int n = pi.dim();
    AltTensor j(n, 3);
    for (int s = 0; s < n; ++s)
        for (int k = s + 1; k < n; ++k)
            for (int l = k + 1; l < n; ++l) {
                Polynomial acc(n);
                for (int r = 0; r < n; ++r) {
                    acc = acc + pi.entry(s, r) * pi.entry(l, k).derivative(r);
                    acc = acc + pi.entry(k, r) * pi.entry(s, l).derivative(r);
                    acc = acc + pi.entry(l, r) * pi.entry(k, s).derivative(r);
                }
                j.set_comp({s, k, l}, acc);
            }
    return j;
}

bool is_poisson(const PolyBivector& pi) { return jacobiator(pi).is_zero(); }

AltTensor sharp(const PolyBivector& pi, const AltTensor& alpha) {
    if (alpha.degree() != 1 || alpha.n_vars() != pi.dim())
        throw std::invalid_argument("sharp: need a 1-form in matching dimension");
    int n = pi.dim();
    AltTensor v(n, 1);
    for (int i = 0; i < n; ++i) {
        Polynomial acc(n);
        for (int j = 0; j < n; ++j) acc = acc + pi.entry(i, j) * alpha.comp({j});
        v.set_comp({i}, acc);
    }
    return v;
}

Polynomial poisson_bracket(const PolyBivector& pi, const Polynomial& f, const Polynomial& g) {
    if (f.n_vars() != pi.dim() || g.n_vars() != pi.dim())
        throw std::invalid_argument("poisson_bracket: arity mismatch");
    int n = pi.dim();
    Polynomial acc(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Polynomial w = pi.entry(i, j);
            if (w.is_zero()) continue;
            acc = acc + w * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
        }
    return acc;
}

Polynomial pairing(const PolyBivector& pi, const AltTensor& alpha, const AltTensor& beta) {
    int n = pi.dim();
    Polynomial acc(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Polynomial w = pi.entry(i, j);
            if (w.is_zero()) continue;
            acc = acc + w * (alpha.comp({i}) * beta.comp({j}) - alpha.comp({j}) * beta.comp({i}));
        }
    return acc;
}

AltTensor anchor_field(const PolyBivector& pi, const AltTensor& alpha) {
    if (alpha.degree() != 1 || alpha.n_vars() != pi.dim())
        throw std::invalid_argument("anchor_field: need a 1-form");
    int n = pi.dim();
    AltTensor v(n, 1);
    for (int j = 0; j < n; ++j) {
        Polynomial acc(n);
        for (int i = 0; i < n; ++i) acc = acc + alpha.comp({i}) * pi.entry(i, j);
        v.set_comp({j}, acc);
    }
    return v;
}

namespace {
// Lie derivative of a 1-form along a vector field, in coordinates:
// (L_X beta)_i = sum_j [ X^j d_j beta_i + beta_j d_i X^j ].
AltTensor lie_derivative_form(const AltTensor& x, const AltTensor& beta) {
    int n = x.n_vars();
    AltTensor r(n, 1);
    for (int i = 0; i < n; ++i) {
        Polynomial acc(n);
        for (int j = 0; j < n; ++j) {
            acc = acc + x.comp({j}) * beta.comp({i}).derivative(j);
            acc = acc + beta.comp({j}) * x.comp({j}).derivative(i);
        }
        r.set_comp({i}, acc);
    }
    return r;
}
} // namespace

AltTensor koszul_bracket(const PolyBivector& pi, const AltTensor& alpha, const AltTensor& beta) {
    if (alpha.degree() != 1 || beta.degree() != 1)
        throw std::invalid_argument("koszul_bracket: need 1-forms");
    AltTensor va = anchor_field(pi, alpha);
    AltTensor vb = anchor_field(pi, beta);
    AltTensor lie1 = lie_derivative_form(va, beta);
    AltTensor lie2 = lie_derivative_form(vb, alpha);
    AltTensor dpair = differential(pairing(pi, alpha, beta));
    // [a,b] = L_{rho a} b - L_{rho b} a - d Pi(a,b); with <b, rho a> = Pi(a,b)
    // this reproduces [df, dg] = d{f,g}.
    AltTensor r = lie1 - lie2;
    return r - dpair;
}

AltTensor algebroid_differential(const PolyBivector& pi, const AltTensor& w) {
    int n = pi.dim();
    if (w.n_vars() != n) throw std::invalid_argument("algebroid_differential: arity");
    if (w.degree() == 0) {
        // delta f is the vector field pairing as <delta f, alpha> = rho(alpha) f,
        // i.e. (delta f)^j = {x_j, f} = (sharp df)^j.
        Polynomial f = w.comp({});
        return sharp(pi, differential(f));
    }
    if (w.degree() == 1) {
        // Chevalley-Eilenberg against the Koszul bracket on the dx_j:
        // (delta V)^{jk} = rho(dx_j) V^k - rho(dx_k) V^j - sum_i V^i [dx_j, dx_k]_i.
        AltTensor out(n, 2);
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                AltTensor dxj(n, 1), dxk(n, 1);
                dxj.set_comp({j}, Polynomial::constant(n, Rat(1)));
                dxk.set_comp({k}, Polynomial::constant(n, Rat(1)));
                AltTensor rj = anchor_field(pi, dxj);
                AltTensor rk = anchor_field(pi, dxk);
                Polynomial acc(n);
                for (int i = 0; i < n; ++i) {
                    acc = acc + rj.comp({i}) * w.comp({k}).derivative(i);
                    acc = acc - rk.comp({i}) * w.comp({j}).derivative(i);
                }
                AltTensor kb = koszul_bracket(pi, dxj, dxk);
                for (int i = 0; i < n; ++i) acc = acc - w.comp({i}) * kb.comp({i});
                out.set_comp({j, k}, acc);
            }
        return out;
    }
    throw std::invalid_argument("algebroid_differential: degree > 1 not supported");
}

} // namespace sympl
