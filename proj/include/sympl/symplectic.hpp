#pragma once

#include "sympl/matrix.hpp"

#include <string>

namespace sympl {

// A finite dimensional symplectic vector space: even dimension and an
// antisymmetric nondegenerate form, both validated at construction. The
// one-point space (dimension 0) is allowed; it is the unit object for
// products and the source of the pervasive * -|-> G relations.
struct SymplecticSpace {
    int dim = 0;
    Mat omega; // dim x dim

    SymplecticSpace() : omega(0, 0) {}
    SymplecticSpace(int dim_, Mat omega_);

    // Pairing u^T omega v.
    Rat form(const std::vector<Rat>& u, const std::vector<Rat>& v) const;

    bool operator==(const SymplecticSpace& o) const { return dim == o.dim && omega == o.omega; }
};

// Standard 2n-dimensional space, basis (q_1..q_n, p_1..p_n),
// omega(q_i, p_j) = delta_ij. Rejects n = 0.
SymplecticSpace standard_space(int n);

// The point.
SymplecticSpace point_space();

// Sign-reversed form on the same underlying space.
SymplecticSpace bar(const SymplecticSpace& s);

// Direct sum with block-diagonal form.
SymplecticSpace product(const SymplecticSpace& a, const SymplecticSpace& b);

enum class SubspaceClass { isotropic, coisotropic, lagrangian, symplectic, generic };

std::string to_string(SubspaceClass c);

// A subspace of a symplectic vector space, stored in reduced column echelon
// form so that equal subspaces have equal basis matrices.
class Subspace {
public:
    // Columns of `basis` span the subspace; they need not be independent,
    // canonicalization prunes them. Throws only on shape mismatch.
    Subspace(SymplecticSpace ambient, const Mat& basis);

    static Subspace zero(const SymplecticSpace& ambient);
    static Subspace full(const SymplecticSpace& ambient);
    static Subspace span_of(const SymplecticSpace& ambient, const std::vector<std::vector<Rat>>& vecs);

    const SymplecticSpace& ambient() const { return ambient_; }
    int ambient_dim() const { return ambient_.dim; }
    int dim() const { return basis_.cols(); }
    const Mat& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    // Image under a linear map into `target` (map.cols() == ambient dim).
    Subspace image(const Mat& map, const SymplecticSpace& target) const;

private:
    SymplecticSpace ambient_;
    Mat basis_;
};

// W^omega = { v : omega(v, w) = 0 for all w in W }.
Subspace symplectic_orthogonal(const Subspace& w);

SubspaceClass classify_subspace(const Subspace& w);

bool is_lagrangian(const Subspace& w);

// Data of the symplectic quotient C / C^omega of a coisotropic subspace.
struct Reduction {
    SymplecticSpace reduced;   // C / C^omega with the induced form
    Mat characteristic;        // basis of C^omega (columns), inside ambient
    Mat representatives;       // ambient-coordinates lifts of the reduced basis
    // Coordinates of [v] in the reduced basis; v must lie in C.
    std::vector<Rat> project(const std::vector<Rat>& v) const;
};

// Requires classify_subspace(c) in {coisotropic, lagrangian}; throws otherwise.
// dim(reduced) = 2 dim C - dim ambient; the induced form is checked
// antisymmetric and nondegenerate.
Reduction reduce_coisotropic(const Subspace& c);

// The projection {(c, [c]) : c in C} as a subspace of ambient + reduced; it
// is Lagrangian there (for -omega (+) omega_reduced), which callers may
// assert by wrapping it in a CanonicalRelation.
Mat reduction_projection_graph(const Subspace& c, const Reduction& red);

// Matrix whose rows annihilate exactly the given subspace: v in W iff N v = 0.
Mat annihilator_rows(const Subspace& w);

} // namespace sympl
