#pragma once

#include "gx/simplicial.hpp"

#include <map>
#include <string>
#include <vector>

namespace gx {

enum class Ring { Z, Z2, Z4, QZ };

std::string ring_to_string(Ring r);
Ring parse_ring(const std::string& s);

// Simplicial cochain with coefficients in Z, Z/2, Z/4, or Q/Z.  Values are
// stored sparsely (absent = 0) and normalized on entry: Z/2 to {0,1}, Z/4 to
// {0..3}, Q/Z to [0,1).  Equality is therefore plain map equality.
class Cochain {
public:
    Cochain(ComplexPtr cx, Ring ring, int degree) : cx_(std::move(cx)), ring_(ring), degree_(degree) {}

    const ComplexPtr& complex() const { return cx_; }
    Ring ring() const { return ring_; }
    int degree() const { return degree_; }
    const std::map<int, Rat>& values() const { return vals_; }
    bool is_zero() const { return vals_.empty(); }

    Rat value(int idx) const {
        auto it = vals_.find(idx);
        return it == vals_.end() ? Rat(0) : it->second;
    }
    Rat value(const Simplex& s) const;
    void set(int idx, const Rat& v);
    void add(int idx, const Rat& v);

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain operator-() const;
    Cochain scaled(const Int& k) const;
    bool operator==(const Cochain& o) const;

    // dense value vector over all degree-k simplices
    std::vector<Rat> dense() const;
    static Cochain from_dense(ComplexPtr cx, Ring ring, int degree, const std::vector<Rat>& v);

    // bridges to the GF(2) solvers; ring must be Z/2
    GF2Vec gf2() const;
    static Cochain from_gf2(ComplexPtr cx, int degree, const GF2Vec& v);

private:
    Rat normalize(const Rat& v) const;

    ComplexPtr cx_;
    Ring ring_;
    int degree_;
    std::map<int, Rat> vals_;
};

// Simplicial coboundary (dc)(sigma) = sum_i (-1)^i c(face_i sigma).
Cochain d(const Cochain& c);

// Alexander-Whitney cup product: (x cup y)(v0..v_{m+n}) =
// x(v0..v_m) y(v_m..v_{m+n}).  Rings with multiplication only (not Q/Z).
Cochain cup(const Cochain& x, const Cochain& y);

// cup_1 in bidegrees (1,1), (1,2), (2,1), (2,2):
//   (A u1 B)(01)    = -A(01)B(01)
//   (A u1 P)(012)   = -A(02)P(012)
//   (P u1 A)(012)   =  P(012)A(01) + P(012)A(12)
//   (P u1 Q)(0123)  =  P(013)Q(123) - P(023)Q(012)
// Other bidegrees are rejected.
Cochain cup1(const Cochain& x, const Cochain& y);

// cup_2 in bidegree (2,2): (P u2 Q)(012) = -P(012)Q(012).
Cochain cup2(const Cochain& x, const Cochain& y);

// The integral lift with values 0 and 1 only.
Cochain special_lift(const Cochain& x);

// Pontrjagin square of the cup square of a 1-cocycle a: A^4 reduced mod 4.
Cochain pontrjagin_square_sq(const Cochain& a);

struct CoefficientMorphism {
    enum class Kind { Mod2, Mod4, Double, Half, Quarter4, Nth };
    Kind kind;
    Int n;  // Nth only

    static CoefficientMorphism mod2() { return {Kind::Mod2, 0}; }
    static CoefficientMorphism mod4() { return {Kind::Mod4, 0}; }
    static CoefficientMorphism dbl() { return {Kind::Double, 0}; }
    static CoefficientMorphism half() { return {Kind::Half, 0}; }
    static CoefficientMorphism quarter4() { return {Kind::Quarter4, 0}; }
    static CoefficientMorphism nth(Int n) { return {Kind::Nth, std::move(n)}; }
};

Cochain map_coefficients(const CoefficientMorphism& m, const Cochain& c);

// shorthands for the morphisms used throughout the formulas
Cochain half(const Cochain& z2_cochain);           // Z/2 -> Q/Z, 1 -> 1/2
Cochain quarter4(const Cochain& z4_cochain);       // Z/4 -> Q/Z, 1 -> 1/4
Cochain nth(const Cochain& z_cochain, const Int&); // Z -> Q/Z, 1 -> 1/n
Cochain mod2(const Cochain& z_cochain);            // Z -> Z/2

// (f^* c)(sigma) = c(f(sigma)), zero on simplices collapsed by f.
Cochain pullback_cochain(const SimplicialMap& f, const Cochain& c);

// sum of M(sigma) c(sigma), reduced in the ring of c.
Rat integrate(const Cochain& c, const SignedChain& m);

struct NamedCochain {
    std::string name;
    Cochain c;
};

// Line format: `cochain <name> deg <k> coeff <z|z2|z4|qz>` then
// `<v,v,...> = <value>` per nonzero simplex.  '#' starts a comment.
NamedCochain parse_cochain(const std::string& text, const ComplexPtr& cx);
std::string emit_cochain(const std::string& name, const Cochain& c);

}  // namespace gx
