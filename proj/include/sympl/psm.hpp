#pragma once

#include "sympl/bivector.hpp"
#include "sympl/symplectic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sympl {

// Grid-sampled boundary field: path samples X on t_k = k/N and a covector
// density eta per interval. The discrete A-path constraint is the explicit
// first-order step X_{k+1} = X_k + (1/N) sharp(Pi)(X_k) eta_k.
struct DiscretizedBoundaryField {
    PolyBivector pi;
    int N = 0;
    std::vector<std::vector<Rat>> x;   // (N+1) x n
    std::vector<std::vector<Rat>> eta; // N x n

    DiscretizedBoundaryField(PolyBivector p, int n_, std::vector<std::vector<Rat>> x_,
                             std::vector<std::vector<Rat>> eta_);
    int dim() const { return pi.dim(); }
};

DiscretizedBoundaryField integrate_apath(const PolyBivector& pi, const std::vector<Rat>& x0,
                                         const std::vector<std::vector<Rat>>& eta);

// max_k max_i | X_{k+1} - X_k - (1/N) (sharp eta_k)(X_k) |; 0 iff the field
// satisfies the discrete constraint.
Rat apath_residual(const DiscretizedBoundaryField& f);

// Endpoint-matched concatenation onto 2N intervals. Densities double so the
// per-interval step (1/N') eta' reproduces the original steps exactly.
DiscretizedBoundaryField concat(const DiscretizedBoundaryField& f1,
                                const DiscretizedBoundaryField& f2);

// Pullback under t -> 1 - t: reverses X, reverses and negates eta.
DiscretizedBoundaryField invert(const DiscretizedBoundaryField& f);

// Resample N -> 2N by halving every interval; exact for bivectors that are
// constant along each step (the two supported class kinds).
DiscretizedBoundaryField refine(const DiscretizedBoundaryField& f);

struct LinearizedConstraint {
    SymplecticSpace phase;    // standard form on R^{2nN}, coordinates (m, e)
    Subspace tangent;         // image of ker д(constraint) in (m, e) coordinates
    SubspaceClass classification = SubspaceClass::generic;
    int defect = 0;           // dim of (T^omega mod T^omega cap T): 0 iff coisotropic
};

// Exact kernel of the differential of the discrete constraint map at the
// field, pushed into the discretized boundary phase space. The phase space
// pairs each interval density e_k with the interval average of dX (the
// piecewise-linear / piecewise-constant pairing of the Riemann-sum form),
// which is a standard symplectic form on R^{2nN}. Requires residual 0.
LinearizedConstraint linearized_constraint_space(const DiscretizedBoundaryField& f);

enum class PathKind { zero, constant_nondegenerate };

// Complete invariant of a boundary field modulo the discrete homotopy for
// the two closed-form kinds:
//   zero Pi:          base point X_0 and the total density integral;
//   constant nondeg.: the endpoint pair (X_0, X_N).
struct PathClass {
    PathKind kind;
    std::vector<Rat> base;  // X_0
    std::vector<Rat> data;  // eta integral (zero) or X_N (constant)

    bool operator==(const PathClass& o) const {
        return kind == o.kind && base == o.base && data == o.data;
    }
};

// Rejects unsupported bivector kinds and nonzero residuals.
PathClass classify_path(const DiscretizedBoundaryField& f);

// Groupoid operations on invariants: fiberwise addition over a fixed base
// point for the zero kind, pair composition for the constant kind.
PathClass class_compose(const PathClass& a, const PathClass& b);
PathClass class_invert(const PathClass& c);

} // namespace sympl
