#pragma once

#include "gx/cochain.hpp"
#include "gx/cohomology.hpp"
#include "gx/exact_linear.hpp"
#include "gx/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gx {

// Group element representative: w is a Q/Z 3-cochain taken modulo
// coboundaries, p and a are Z/2 cocycles of degree 2 and 1.
struct Triple {
    Cochain w, p, a;

    Triple(Cochain w_, Cochain p_, Cochain a_);
    static Triple zero(const ComplexPtr& x);

    const ComplexPtr& complex() const { return w.complex(); }
    bool operator==(const Triple& o) const { return w == o.w && p == o.p && a == o.a; }
};

// The differential: dw + (1/2) p cup p, a Q/Z 4-cochain.
Cochain big_d(const Triple& g);

// The co-differential ((1/2) t dt, dt, dx) from a 1-cochain and a 0-cochain.
Triple big_d_prime(const Cochain& t, const Cochain& x);

Triple product(const Triple& g1, const Triple& g2);
Triple inverse(const Triple& g);
Triple power(const Triple& g, const Int& n);  // n >= 0
Triple commutator(const Triple& g1, const Triple& g2);

// Spin-structure twist by a 1-cocycle b; an order-two automorphism on classes.
Triple chi(const Cochain& b, const Triple& g);

// Change of variables w -> w - (1/8) A^3 into the quartic-equation form.
Triple kapustin_form(const Triple& g);
// d(w') + (1/2) p^2 + (1/4) P(a^2); zero whenever big_d(g) = 0.
Cochain kapustin_residual(const Triple& g);

// Central extension representative ((1/2) a (a cup1 b) b + (1/4) A B^2, ab, 0).
Triple extension_cocycle(const Cochain& a, const Cochain& b);

Triple pullback_triple(const SimplicialMap& f, const Triple& g);

// Evaluation of a G^1 class against a fundamental cycle.  The spin and
// arf corrections are external geometric inputs; arf_term must be given
// explicitly when g.a is nonzero.
Rat evaluate_g1(const Triple& g, const SignedChain& m, const Cochain& t, const Rat& spin_term,
                std::optional<Rat> arf_term = std::nullopt);

enum class FiltrationLevel { TopGrade, MiddleGrade, BottomGrade, Identity };
std::string filtration_level_to_string(FiltrationLevel level);

struct FiltrationClass {
    FiltrationLevel level = FiltrationLevel::Identity;
    // TopGrade: 0/1 coordinates in the H^1(Z/2) basis.  MiddleGrade: 0/1
    // coordinates in the SH^2 basis.  BottomGrade: pairings with the
    // integral homology basis of degree 3.  Identity: empty.
    std::vector<Rat> coordinates;
};

struct GStructureReport {
    int h1_dim = 0;
    std::vector<Cochain> sh2;
    AbelianGroupPresentation h3;
    // alpha column j: class of the squared lift of the j-th SH^2 basis
    // element, in the mod-two coordinates of the even torsion summands of h3.
    GF2Mat alpha{0, 0};
    std::vector<std::vector<FiltrationClass>> z_table;  // extension classes on H^1 basis pairs
};

// Decision procedures and derived structure for one complex, with the
// exact-linear decompositions built once and reused.
class GroupContext {
public:
    explicit GroupContext(ComplexPtr x);

    const ComplexPtr& complex() const { return x_; }

    // equality in Cbar x Z^2 x Z^1: exact p and a, w modulo coboundaries
    bool cbar_equal(const Triple& g1, const Triple& g2);
    // membership of a D-cocycle in the image of the co-differential
    bool is_identity(const Triple& g);
    bool g_equal(const Triple& g1, const Triple& g2);
    std::optional<Int> order(const Triple& g, const Int& bound = 64);

    FiltrationClass filtration_class(const Triple& g);

    // basis of the subgroup SH^2 of H^2(Z/2) killed by p -> (1/2)[p^2]
    const std::vector<Cochain>& sh2_basis();
    // (w, p, 0) with dw = -(1/2) p cup p; requires [p] in SH^2
    Triple lift_to_G1(const Cochain& p);

    GStructureReport structure_report();

    bool lifts_to_order2(const Cochain& a);
    bool lifts_to_order4(const Cochain& a);

    // cocycle basis of degree k over Z/2, fixed per context
    const std::vector<Cochain>& z2_cocycle_basis(int k);

    // checks the two defining conditions of a spin-characterizing
    // quadratic function given by its values on z2_cocycle_basis(2)
    bool validate_spin_quadratic(const SignedChain& m, const std::vector<Rat>& q_values);

private:
    const SNFDecomposition& snf_d(int k);  // SNF of d: C^k -> C^{k+1}
    const GF2Mat& gf2_d(int k);
    GF2Cohomology& h(int k);
    const HomologyBasis& hb(int k);
    void require_same_complex(const Triple& g) const;

    ComplexPtr x_;
    std::map<int, SNFDecomposition> snf_;
    std::map<int, GF2Mat> gf2_;
    std::map<int, GF2Cohomology> h_;
    std::map<int, HomologyBasis> hb_;
    std::map<int, std::vector<Cochain>> z2_basis_;
    std::optional<std::vector<Cochain>> sh2_;
};

// Triple file: a `triple <name>` header followed by three cochain
// sections named w (qz, deg 3), p (z2, deg 2), a (z2, deg 1).
struct NamedTriple {
    std::string name;
    Triple triple;
};
NamedTriple parse_triple(const std::string& text, const ComplexPtr& cx);
std::string emit_triple(const std::string& name, const Triple& g);

}  // namespace gx
