#pragma once

#include "sympl/groupoid.hpp"
#include "sympl/relation.hpp"

#include <optional>

namespace sympl {

// Relational symplectic groupoid in the linear category: a symplectic space
// G, a subspace L of G^3 meant to be cyclic and Lagrangian for the plain
// product form, and a linear involution I meant to be antisymplectic.
// Invariants are verified by verify_axioms, not forced at construction, so
// that deliberately broken triples produce failure reports instead of
// refusing to exist.
struct RelationalGroupoidLinear {
    std::string name;
    SymplecticSpace space; // G
    Subspace L;            // subspace of G^3
    Mat I;                 // dim G x dim G

    RelationalGroupoidLinear(std::string name_, SymplecticSpace g, Subspace l, Mat i)
        : name(std::move(name_)), space(std::move(g)), L(std::move(l)), I(std::move(i)) {}
};

// Everything derived from (G, L, I) by relation composition.
struct DerivedCore {
    LinRel L_rel;  // G x G -|-> G-bar, graph L
    LinRel L3;     // G x G -|-> G:  I_rel . L_rel
    LinRel L1;     // *     -|-> G:  L3 . L_I
    LinRel L2;     // G     -|-> G:  L3 . (L1 x Id)
    Subspace C;    // range of L2 (= L2 . G_rel)
    Subspace K;    // {v : (0,v) in L2}
    // Quotient M = L1 / (K cap L1).
    int dim_M = 0;
    Mat m_reps;    // lifts of the reduced basis, inside G
    Mat m_kernel;  // basis of K cap L1
    // S = {(c, [l]) : exists g, (l, c, g) in L3} and
    // T = {(c, [l]) : exists g, (c, l, g) in L3}, canonical spans inside
    // G + M (coordinates: dim G then dim M). M carries no form of its own,
    // so these stay raw matrices rather than Subspace values.
    Mat S_basis;
    Mat T_basis;

    DerivedCore(const SymplecticSpace& g)
        : C(Subspace::zero(g)), K(Subspace::zero(g)), m_reps(g.dim, 0), m_kernel(g.dim, 0),
          S_basis(0, 0), T_basis(0, 0) {}

    // Coordinates of the class [l] for l in L1.
    std::vector<Rat> project_M(const std::vector<Rat>& l) const;
};

// The zero-dimensional groupoid: a point with the empty relations.
RelationalGroupoidLinear point_groupoid();

// L = {(g, h, inv(mu(g,h))) : s(g) = t(h)}, I = inv. The inversion twist in
// the third slot is what makes L cyclically symmetric and Lagrangian for the
// plain form omega (+) omega (+) omega; I_rel . L_rel then recovers Gr_mu.
// Requires verify_groupoid_axioms(g) to pass.
RelationalGroupoidLinear build_from_groupoid(const LinearGroupoidInstance& g);

// L = Lag x Lag x Lag. Requires Lag Lagrangian and I(Lag) = Lag; I is *not*
// required antisymplectic here, so the literal identity reading can be
// constructed and then flagged by verify_axioms.
RelationalGroupoidLinear lagrangian_triple(const SymplecticSpace& g, const Subspace& lag, const Mat& i);

DerivedCore derive_core(const RelationalGroupoidLinear& rg);

// A.1-A.7, the construction invariants, and the corollary identities C.1-C.8.
GroupoidReport verify_axioms(const RelationalGroupoidLinear& rg);

// A.8-A.10: C coisotropic, L2 an equivalence relation on C whose classes are
// the characteristic cosets, M finite dimensional (dimension reported), S, T.
GroupoidReport verify_regular(const RelationalGroupoidLinear& rg, const DerivedCore& core);

struct InducedPoisson {
    bool solvable = false;
    bool unique = false;
    bool t_consistent = false; // the same solution space works for T
    Mat pi;                    // dim M x dim M particular solution (if solvable)
    int freedom = 0;           // dimension of the homogeneous solution space
    std::string detail;

    InducedPoisson() : pi(0, 0) {}
};

// Conjecture explorer: the affine space of antisymmetric pi on M making S
// coisotropic in G x M, mixed coisotropy meaning bivector(Ann W) inside W
// for the block bivector (-omega^{-1}) (+) pi. Cross-checks that the same
// solution space makes T coisotropic for (+omega^{-1}) (+) pi (T lives over
// G-bar). Emits the solution space; never asserts the conjecture.
InducedPoisson induced_poisson(const RelationalGroupoidLinear& rg, const DerivedCore& core);

enum class MorphismLevel { not_morphism, morphism, equivalence };

std::string to_string(MorphismLevel l);

// F: a canonical relation g.space -|-> h.space. Checks
//   1. the graph is Lagrangian (construction invariant, re-verified),
//   2. (I_g x I_h)(F) = F,
//   3. (F x F x F)(L_g) = L_h,
// and for an equivalence the transposed condition (F' x F' x F')(L_h) = L_g.
MorphismLevel check_morphism(const CanonicalRelation& f, const RelationalGroupoidLinear& g,
                             const RelationalGroupoidLinear& h);

} // namespace sympl
