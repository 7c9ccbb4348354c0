#pragma once

#include "sympl/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace sympl {

// Multivariate polynomial over Q with a canonical term order (lex on the
// exponent tuples). No zero coefficients and no duplicate monomials are ever
// stored, so equality of polynomials is equality of the term maps.
class Polynomial {
public:
    using Exps = std::vector<uint32_t>;

    explicit Polynomial(int n_vars = 0) : n_vars_(n_vars) {}

    static Polynomial constant(int n_vars, const Rat& c);
    static Polynomial variable(int n_vars, int i); // x_i
    static Polynomial monomial(int n_vars, const Exps& e, const Rat& c);

    int n_vars() const { return n_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    void add_term(const Exps& e, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rat& c) const;
    bool operator==(const Polynomial& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int i) const;
    Rat eval(const std::vector<Rat>& x) const;
    int total_degree() const; // -1 for the zero polynomial

    std::string str() const;

private:
    int n_vars_;
    std::map<Exps, Rat> terms_;
};

// Totally antisymmetric tensor of polynomials in degree d: components are
// stored for strictly increasing index tuples only. Degree 1 instances play
// both the 1-form role (components alpha_i) and the vector-field role
// (components V^i); the variance is semantic, not structural.
class AltTensor {
public:
    AltTensor(int n_vars, int degree) : n_vars_(n_vars), degree_(degree), zero_(n_vars) {}

    static AltTensor of_function(const Polynomial& f); // degree 0

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    bool is_zero() const;

    // idx must be strictly increasing and of length = degree.
    const Polynomial& comp(const std::vector<int>& idx) const;
    void set_comp(const std::vector<int>& idx, const Polynomial& p);
    // arbitrary index order; resolves the sign, zero on repeated indices
    Polynomial comp_signed(const std::vector<int>& idx) const;

    AltTensor operator+(const AltTensor& o) const;
    AltTensor operator-(const AltTensor& o) const;
    bool operator==(const AltTensor& o) const;

    const std::map<std::vector<int>, Polynomial>& components() const { return comps_; }

private:
    int n_vars_, degree_;
    std::map<std::vector<int>, Polynomial> comps_;
    Polynomial zero_;
};

// Exterior derivative of a function: (df)_i = d_i f.
AltTensor differential(const Polynomial& f);

} // namespace sympl
