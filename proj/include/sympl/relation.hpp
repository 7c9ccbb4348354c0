#pragma once

#include "sympl/symplectic.hpp"

namespace sympl {

// Raw linear relation between vector spaces of the stated dimensions: a
// subspace of the direct sum, no Lagrangian claim. The verification code
// works at this level so that broken inputs (a non-antisymplectic I, a
// twisted multiplication) produce failure reports instead of refusing to
// compose.
struct LinRel {
    int src_dim = 0;
    int tgt_dim = 0;
    Mat graph; // (src_dim + tgt_dim) x k, canonical column echelon basis

    LinRel() : graph(0, 0) {}
    LinRel(int s, int t, const Mat& g);

    static LinRel identity(int dim);
    static LinRel of_map(const Mat& a); // {(v, Av)}
    static LinRel from_target_subspace(const Mat& basis, int tgt_dim); // * -|-> V

    LinRel transpose() const;
    // {(a,c) : exists b, (a,b) in this, (b,c) in next}
    LinRel then(const LinRel& next) const;
    // Block product: (a1,a2) -|-> (b1,b2).
    LinRel times(const LinRel& o) const;

    // Source / target projections of the graph as plain column spans.
    Mat domain_basis() const;
    Mat range_basis() const;

    bool operator==(const LinRel& o) const;
};

// A canonical relation: a Lagrangian subspace of src-bar x tgt. Construction
// verifies Lagrangianity, so holding a CanonicalRelation is holding a proof.
class CanonicalRelation {
public:
    CanonicalRelation(SymplecticSpace src, SymplecticSpace tgt, const Mat& graph_basis);
    CanonicalRelation(SymplecticSpace src, SymplecticSpace tgt, LinRel rel);

    const SymplecticSpace& source() const { return src_; }
    const SymplecticSpace& target() const { return tgt_; }
    const LinRel& rel() const { return rel_; }
    const Mat& graph_basis() const { return rel_.graph; }

    CanonicalRelation transpose() const;
    bool operator==(const CanonicalRelation& o) const;

private:
    SymplecticSpace src_, tgt_;
    LinRel rel_;
};

// Identity relation of a space.
CanonicalRelation identity_relation(const SymplecticSpace& g);

enum class MapSign { symplectic, antisymplectic };

bool is_symplectic_map(const Mat& a, const SymplecticSpace& g);
bool is_antisymplectic_map(const Mat& a, const SymplecticSpace& g);

// Graph of an invertible (anti)symplectic map as a canonical relation. For a
// symplectic A the relation is G -|-> G; for an antisymplectic A the source
// carries the sign-reversed form (the graph is Lagrangian in G x G).
// Throws naming the violated identity when A fails the requested sign.
CanonicalRelation graph_of_map(const Mat& a, MapSign sign, const SymplecticSpace& g);

// Composition this: M -|-> N, next: N -|-> P. In the linear category the
// composite is always defined and always Lagrangian; that is re-checked as
// an internal assertion.
CanonicalRelation compose(const CanonicalRelation& first, const CanonicalRelation& next);

// Product relation (A1 x A2) -|-> (B1 x B2).
CanonicalRelation rel_product(const CanonicalRelation& a, const CanonicalRelation& b);

// A Lagrangian subspace of G as a relation * -|-> G.
CanonicalRelation lagrangian_as_relation(const Subspace& lag);

// Forward image of a subspace of the source under a raw relation.
Subspace rel_image(const LinRel& r, const Subspace& of_source, const SymplecticSpace& target);

} // namespace sympl
