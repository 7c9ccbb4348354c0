#pragma once

#include "sympl/relational.hpp"

namespace sympl {

struct PowerAnalysis {
    int n = 0;
    Subspace g_n;              // G_(n) inside G^n
    SubspaceClass g_n_class = SubspaceClass::generic;
    int reduced_dim = -1;      // dim of G_(n) / characteristic
    bool reduced_matches_g = false; // reduced form congruent to omega_G through the multiplication chain
    CanonicalRelation P;       // G -|-> G^n, {(mu_total(a), a) : a in G_(n)}
    bool p_identity = false;       // P' . P = Gr(Id_G)
    bool p_projector = false;      // P . P' = {(a,b) in G_(n)^2 : [a] = [b]}
    GroupoidReport power_axioms;   // verify_axioms of the power relational groupoid
    GroupoidReport power_regular;  // verify_regular of the power relational groupoid

    PowerAnalysis(const Subspace& gn, CanonicalRelation p) : g_n(gn), P(std::move(p)) {}
};

// Relational structure carried by G^n: L = (P x P x P)(L_G) and
// I(g_1,...,g_n) = (inv g_n, ..., inv g_1). For n = 1 this is
// build_from_groupoid(g).
RelationalGroupoidLinear power_groupoid(const LinearGroupoidInstance& g, int n);

// The multiplication relation P_n: G -|-> G^n for the identification of the
// reduced space of G_(n) with G.
CanonicalRelation power_relation(const LinearGroupoidInstance& g, int n);

// Full check of the powers lemma for one n: coisotropy of G_(n), reduction
// dimension and form, both P-relations, and the power groupoid axioms.
PowerAnalysis power_analysis(const LinearGroupoidInstance& g, int n);

// The equivalence candidate P_i . P_j' : G^j -|-> G^i between power groupoids.
CanonicalRelation power_equivalence(const LinearGroupoidInstance& g, int i, int j);

} // namespace sympl
