#pragma once

#include "sympl/relation.hpp"

#include <string>
#include <vector>

namespace sympl {

// A linear groupoid with symplectic total space: all structure maps are
// matrices, composability domains are subspaces, and every axiom is an exact
// linear identity. mu is stored as a matrix on all of G x G whose
// restriction to the fiber product {(g,h) : s(g) = t(h)} is the
// multiplication; values off that subspace are irrelevant.
struct LinearGroupoidInstance {
    std::string name;
    SymplecticSpace total;  // G
    int base_dim = 0;       // M = R^base_dim (no form on the base)
    Mat s;                  // base_dim x dim G
    Mat t;                  // base_dim x dim G
    Mat eps;                // dim G x base_dim
    Mat inv;                // dim G x dim G
    Mat mu;                 // dim G x (2 dim G)

    // {(g,h) : s(g) = t(h)} inside G + G (plain subspace, no form needed).
    Mat fiber_product_basis() const;
    // {(g1,...,gn) : s(g_k) = t(g_{k+1})} inside G^n.
    Mat fiber_power_basis(int n) const;
    // Multiplication of an n-chain down to G: mu(g1, mu(g2, ...)); matrix
    // restricted to the columns of fiber_power_basis(n).
    Mat chain_multiply_on(const Mat& chain_basis, int n) const;
};

struct CheckEntry {
    std::string id;
    bool pass = true;
    int lhs_dim = -1;
    int rhs_dim = -1;
    std::string detail;
};

struct GroupoidReport {
    std::vector<CheckEntry> checks;
    bool all_pass() const;
    const CheckEntry* find(const std::string& id) const;
};

// G = V x V-bar over V = standard_space(n): s(x,y) = y, t(x,y) = x,
// mu((x,y),(y,z)) = (x,z), eps(x) = (x,x), inv(x,y) = (y,x).
LinearGroupoidInstance pair_groupoid(int n);

// G = T*R^n = standard_space(n) over R^n: s = t = base point,
// mu((x,p),(x,q)) = (x,p+q), eps(x) = (x,0), inv(x,p) = (x,-p).
LinearGroupoidInstance cotangent_fiber_groupoid(int n);

// Exact verification of the six groupoid axioms on their composability
// domains, surjectivity of s and t, the antisymplectomorphism property of
// inv, and Lagrangianity of Gr_mu in G x G x G-bar.
GroupoidReport verify_groupoid_axioms(const LinearGroupoidInstance& g);

} // namespace sympl
