#pragma once

#include "gx/cochain.hpp"
#include "gx/exact_linear.hpp"
#include "gx/simplicial.hpp"

#include <string>
#include <vector>

namespace gx {

// Finitely generated abelian group, possibly with circle factors (the
// rational model of (R/Z)^k).  Torsion is in invariant-factor form.
struct AbelianGroupPresentation {
    int free_rank = 0;
    int circle_rank = 0;
    std::vector<Int> torsion;  // d1 | d2 | ..., each >= 2
    std::vector<Cochain> basis_cocycles;

    bool is_trivial() const { return free_rank == 0 && circle_rank == 0 && torsion.empty(); }
    // e.g. "Z^1", "(Q/Z)^1 x Z/2", "0"
    std::string to_string() const;
};

// Integral homology of X in degree k.  Presentation only (no chains).
AbelianGroupPresentation homology(const ComplexPtr& x, int k);

// Generator chains for H_k(X; Z), torsion summands first.
struct HomologyBasis {
    std::vector<SignedChain> chains;
    std::vector<Int> orders;  // invariant factor for torsion, 0 for free
};
HomologyBasis homology_basis(const ComplexPtr& x, int k);

// H^k(X; M) for M in {Z, Z/2, Z/4, Q/Z}, with representative cocycles.
// Q/Z cohomology is Hom(H_k, Q/Z): circle_rank = rank H_k, torsion =
// torsion of H_k; torsion representatives are Q/Z cocycles dual to the
// homology basis, circle summands carry their integer dual covector.
AbelianGroupPresentation cohomology(const ComplexPtr& x, Ring coeff, int k);

// Z/2 cohomology with a coordinate map on cocycles, for filtration work.
class GF2Cohomology {
public:
    GF2Cohomology(const ComplexPtr& x, int k);

    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<GF2Vec>& basis() const { return basis_; }
    Cochain basis_cochain(int i) const;

    // Coordinates of the class of a cocycle in the chosen basis.
    GF2Vec coordinates(const Cochain& cocycle) const;
    bool is_coboundary(const Cochain& cocycle) const;

private:
    GF2Vec reduce_by_image(GF2Vec v) const;

    ComplexPtr x_;
    int k_;
    std::vector<GF2Vec> image_rref_;   // RREF rows spanning the coboundary space
    std::vector<int> image_pivots_;
    std::vector<GF2Vec> basis_;        // chosen cocycle representatives
    std::vector<GF2Vec> aux_rows_;     // eliminated residues of basis_
    std::vector<int> aux_pivots_;
    std::vector<GF2Vec> aux_combos_;   // expression of aux rows in basis_ indices
};

// Pairing sum of w(sigma) h(sigma) over the chain, reduced mod 1.
Rat pair_qz(const Cochain& w, const SignedChain& h);

// A Q/Z cocycle represents zero in H^k iff it pairs to zero with every
// generator of H_k.
bool qz_class_is_zero(const Cochain& w, const HomologyBasis& hb);

}  // namespace gx
