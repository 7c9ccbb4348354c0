#pragma once

#include "sympl/matrix.hpp"
#include "sympl/polynomial.hpp"

namespace sympl {

// Polynomial bivector field Pi on R^n. Antisymmetry is structural: only the
// components Pi^{ij} with i < j are stored.
class PolyBivector {
public:
    explicit PolyBivector(int dim) : dim_(dim) {}

    static PolyBivector zero(int dim) { return PolyBivector(dim); }
    // Constant bivector from an antisymmetric rational matrix.
    static PolyBivector constant(const Mat& m);
    // Pi^{12} = x3, Pi^{23} = x1, Pi^{31} = x2 on R^3.
    static PolyBivector so3_dual();

    int dim() const { return dim_; }
    // 0-based indices; sign handled, entry(i,i) = 0.
    Polynomial entry(int i, int j) const;
    void set_entry(int i, int j, const Polynomial& p); // requires i < j
    const std::map<std::pair<int, int>, Polynomial>& entries() const { return entries_; }

    // Pointwise matrix Pi^{ij}(x).
    Mat eval(const std::vector<Rat>& x) const;
    // Largest total degree over the entries; -1 for the zero bivector.
    int max_degree() const;

    bool operator==(const PolyBivector& o) const;

private:
    int dim_;
    std::map<std::pair<int, int>, Polynomial> entries_;
};

// J^{skl} = sum_r [ Pi^{sr} d_r Pi^{lk} + Pi^{kr} d_r Pi^{sl} + Pi^{lr} d_r Pi^{ks} ],
// the trivector whose vanishing is the Jacobi condition. Totally antisymmetric.
AltTensor jacobiator(const PolyBivector& pi);

bool is_poisson(const PolyBivector& pi);

// (sharp(alpha))^i = sum_j Pi^{ij} alpha_j for a 1-form alpha.
AltTensor sharp(const PolyBivector& pi, const AltTensor& alpha);

// Pointwise matrix of sharp at x: (v)_i = sum_j Pi^{ij}(x) v_j. Same as eval.
// {f, g} = sum_{i<j} Pi^{ij} (d_i f d_j g - d_j f d_i g).
Polynomial poisson_bracket(const PolyBivector& pi, const Polynomial& f, const Polynomial& g);

// Pi(alpha, beta) = sum_{i<j} Pi^{ij} (alpha_i beta_j - alpha_j beta_i).
Polynomial pairing(const PolyBivector& pi, const AltTensor& alpha, const AltTensor& beta);

// Koszul bracket on 1-forms: [df, dg] = d{f, g}, extended by Leibniz. The
// anchor rho feeding the closed formula pairs as <beta, rho(alpha)> =
// Pi(alpha, beta), i.e. rho(alpha)^j = sum_i alpha_i Pi^{ij}; note the
// transposition relative to sharp.
AltTensor koszul_bracket(const PolyBivector& pi, const AltTensor& alpha, const AltTensor& beta);

// Anchor vector field rho(alpha)^j = sum_i alpha_i Pi^{ij}.
AltTensor anchor_field(const PolyBivector& pi, const AltTensor& alpha);

// Differential of the cotangent Lie algebroid on Lambda^* A^* = multivector
// fields: degree 0 (functions) and degree 1 (vector fields) inputs, graded by
// the Chevalley-Eilenberg rule against the Koszul bracket. delta^2 = 0 on
// functions iff Pi is Poisson.
AltTensor algebroid_differential(const PolyBivector& pi, const AltTensor& w);

} // namespace sympl
