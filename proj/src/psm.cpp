#include "sympl/psm.hpp"

#include <stdexcept>

namespace sympl {

DiscretizedBoundaryField::DiscretizedBoundaryField(PolyBivector p, int n_,
                                                   std::vector<std::vector<Rat>> x_,
                                                   std::vector<std::vector<Rat>> eta_)
    : pi(std::move(p)), N(n_), x(std::move(x_)), eta(std::move(eta_)) {
    if (N < 1) throw std::invalid_argument("DiscretizedBoundaryField: N >= 1");
    if (static_cast<int>(x.size()) != N + 1 || static_cast<int>(eta.size()) != N)
        throw std::invalid_argument("DiscretizedBoundaryField: sample counts");
    for (const auto& row : x)
        if (static_cast<int>(row.size()) != pi.dim())
            throw std::invalid_argument("DiscretizedBoundaryField: X row size");
    for (const auto& row : eta)
        if (static_cast<int>(row.size()) != pi.dim())
            throw std::invalid_argument("DiscretizedBoundaryField: eta row size");
}

DiscretizedBoundaryField integrate_apath(const PolyBivector& pi, const std::vector<Rat>& x0,
                                         const std::vector<std::vector<Rat>>& eta) {
    int n = pi.dim();
    int N = static_cast<int>(eta.size());
    if (N < 1) throw std::invalid_argument("integrate_apath: need at least one interval");
    if (static_cast<int>(x0.size()) != n) throw std::invalid_argument("integrate_apath: x0 size");
    Rat h = rat(1, N);
    std::vector<std::vector<Rat>> x;
    x.push_back(x0);
    for (int k = 0; k < N; ++k) {
        Mat b = pi.eval(x.back());
        std::vector<Rat> step = mat_vec(b, eta[k]);
        std::vector<Rat> next(n);
        for (int i = 0; i < n; ++i) next[i] = x.back()[i] + h * step[i];
        x.push_back(next);
    }
    return DiscretizedBoundaryField(pi, N, std::move(x), eta);
}

Rat apath_residual(const DiscretizedBoundaryField& f) {
    int n = f.dim();
    Rat h = rat(1, f.N);
    Rat worst(0);
    for (int k = 0; k < f.N; ++k) {
        Mat b = f.pi.eval(f.x[k]);
        std::vector<Rat> step = mat_vec(b, f.eta[k]);
        for (int i = 0; i < n; ++i) {
            Rat r = rat_abs(f.x[k + 1][i] - f.x[k][i] - h * step[i]);
            if (r > worst) worst = r;
        }
    }
    return worst;
}

DiscretizedBoundaryField concat(const DiscretizedBoundaryField& f1,
                                const DiscretizedBoundaryField& f2) {
    if (!(f1.pi == f2.pi)) throw std::invalid_argument("concat: bivectors differ");
    if (f1.N != f2.N) throw std::invalid_argument("concat: grid sizes differ");
    if (f1.x[f1.N] != f2.x[0]) throw std::invalid_argument("concat: endpoint mismatch");
    std::vector<std::vector<Rat>> x = f1.x;
    x.insert(x.end(), f2.x.begin() + 1, f2.x.end());
    std::vector<std::vector<Rat>> eta;
    auto doubled = [](const std::vector<Rat>& v) {
        std::vector<Rat> w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = 2 * v[i];
        return w;
    };
    for (const auto& e : f1.eta) eta.push_back(doubled(e));
    for (const auto& e : f2.eta) eta.push_back(doubled(e));
    return DiscretizedBoundaryField(f1.pi, 2 * f1.N, std::move(x), std::move(eta));
}

DiscretizedBoundaryField invert(const DiscretizedBoundaryField& f) {
    std::vector<std::vector<Rat>> x(f.x.rbegin(), f.x.rend());
    std::vector<std::vector<Rat>> eta;
    for (int k = f.N - 1; k >= 0; --k) {
        std::vector<Rat> e(f.dim());
        for (int i = 0; i < f.dim(); ++i) e[i] = -f.eta[k][i];
        eta.push_back(e);
    }
    return DiscretizedBoundaryField(f.pi, f.N, std::move(x), std::move(eta));
}

DiscretizedBoundaryField refine(const DiscretizedBoundaryField& f) {
    int n = f.dim();
    Rat half = rat(1, 2 * f.N);
    std::vector<std::vector<Rat>> x, eta;
    for (int k = 0; k < f.N; ++k) {
        x.push_back(f.x[k]);
        Mat b = f.pi.eval(f.x[k]);
        std::vector<Rat> step = mat_vec(b, f.eta[k]);
        std::vector<Rat> mid(n);
        for (int i = 0; i < n; ++i) mid[i] = f.x[k][i] + half * step[i];
        x.push_back(mid);
        eta.push_back(f.eta[k]);
        eta.push_back(f.eta[k]);
    }
    x.push_back(f.x[f.N]);
    return DiscretizedBoundaryField(f.pi, 2 * f.N, std::move(x), std::move(eta));
}

LinearizedConstraint linearized_constraint_space(const DiscretizedBoundaryField& f) {
    if (apath_residual(f) != 0)
        throw std::invalid_argument("linearized_constraint_space: field violates the constraint");
    int n = f.dim();
    int N = f.N;
    Rat h = rat(1, N);

    // Kernel of the full constraint differential over (dX_0..dX_N, de_0..de_{N-1}):
    // dX_{k+1} - dX_k - h [ A_k dX_k + B_k de_k ] = 0,
    // (A_k)^i_m = sum_j d_m Pi^{ij}(X_k) eta_{k,j}, B_k = Pi(X_k).
    int nvars = n * (N + 1) + n * N;
    Mat sys(n * N, nvars);
    for (int k = 0; k < N; ++k) {
        Mat bk = f.pi.eval(f.x[k]);
        Mat ak(n, n);
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m) {
                Rat acc(0);
                for (int j = 0; j < n; ++j)
                    acc += f.pi.entry(i, j).derivative(m).eval(f.x[k]) * f.eta[k][j];
                ak.at(i, m) = acc;
            }
        for (int i = 0; i < n; ++i) {
            int row = k * n + i;
            sys.at(row, n * (k + 1) + i) += 1;
            sys.at(row, n * k + i) -= 1;
            for (int m = 0; m < n; ++m) sys.at(row, n * k + m) -= h * ak.at(i, m);
            for (int j = 0; j < n; ++j) sys.at(row, n * (N + 1) + n * k + j) -= h * bk.at(i, j);
        }
    }
    Mat ker = kernel(sys);

    // Push into phase coordinates: m_k = (dX_k + dX_{k+1})/2 paired with e_k.
    Mat basis(2 * n * N, ker.cols());
    for (int j = 0; j < ker.cols(); ++j) {
        for (int k = 0; k < N; ++k)
            for (int i = 0; i < n; ++i)
                basis.at(k * n + i, j) =
                    (ker.at(n * k + i, j) + ker.at(n * (k + 1) + i, j)) / 2;
        for (int r = 0; r < n * N; ++r) basis.at(n * N + r, j) = ker.at(n * (N + 1) + r, j);
    }

    LinearizedConstraint out{standard_space(n * N),
                             Subspace(standard_space(n * N), basis),
                             SubspaceClass::generic, 0};
    out.classification = classify_subspace(out.tangent);
    Subspace orth = symplectic_orthogonal(out.tangent);
    out.defect = orth.dim() - orth.intersect(out.tangent).dim();
    return out;
}

namespace {
std::optional<PathKind> supported_kind(const PolyBivector& pi) {
    if (pi.max_degree() <= -1) return PathKind::zero;
    if (pi.max_degree() == 0) {
        Mat c = pi.eval(std::vector<Rat>(pi.dim(), Rat(0)));
        if (rank(c) == pi.dim()) return PathKind::constant_nondegenerate;
        return std::nullopt;
    }
    return std::nullopt;
}
} // namespace

PathClass classify_path(const DiscretizedBoundaryField& f) {
    auto kind = supported_kind(f.pi);
    if (!kind)
        throw std::invalid_argument(
            "classify_path: supported kinds are the zero bivector and constant nondegenerate ones");
    if (apath_residual(f) != 0)
        throw std::invalid_argument("classify_path: field violates the constraint");
    PathClass c{*kind, f.x[0], {}};
    if (*kind == PathKind::zero) {
        std::vector<Rat> total(f.dim(), Rat(0));
        Rat h = rat(1, f.N);
        for (const auto& e : f.eta)
            for (int i = 0; i < f.dim(); ++i) total[i] += h * e[i];
        c.data = total;
    } else {
        c.data = f.x[f.N];
    }
    return c;
}

PathClass class_compose(const PathClass& a, const PathClass& b) {
    if (a.kind != b.kind) throw std::invalid_argument("class_compose: kinds differ");
    if (a.kind == PathKind::zero) {
        if (a.base != b.base)
            throw std::invalid_argument("class_compose: classes sit over different base points");
        PathClass r = a;
        for (size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] + b.data[i];
        return r;
    }
    // pair composition: (start_a, end_a) . (start_b, end_b) needs end_a = start_b
    if (a.data != b.base) throw std::invalid_argument("class_compose: endpoints not composable");
    return PathClass{a.kind, a.base, b.data};
}

PathClass class_invert(const PathClass& c) {
    if (c.kind == PathKind::zero) {
        PathClass r = c;
        for (auto& v : r.data) v = -v;
        return r;
    }
    return PathClass{c.kind, c.data, c.base};
}

} // namespace sympl
