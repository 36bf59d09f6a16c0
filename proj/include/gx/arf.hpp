#pragma once

#include "gx/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gx {

// Element of Z[zeta_8] in the basis 1, zeta, zeta^2, zeta^3 with zeta^4 = -1.
struct Zeta8Integer {
    Int c[4] = {0, 0, 0, 0};

    Zeta8Integer() = default;
    explicit Zeta8Integer(const Int& a) { c[0] = a; }

    static Zeta8Integer zeta_power(int k);  // zeta^k for any integer k
    static Zeta8Integer sqrt2();            // zeta - zeta^3

    Zeta8Integer operator+(const Zeta8Integer& o) const;
    Zeta8Integer operator-(const Zeta8Integer& o) const;
    Zeta8Integer operator*(const Zeta8Integer& o) const;
    bool operator==(const Zeta8Integer& o) const;
    bool is_zero() const;

    Zeta8Integer conjugate() const;  // complex conjugation, zeta -> -zeta^3
    Int norm_squared() const;        // self times conjugate; must land in Z

    std::string to_string() const;
};

// Z/4-valued quadratic refinement of a symmetric Z/2 bilinear form:
// Q(x+y) = Q(x) + Q(y) + 2 B(x,y).  The diagonal of B is forced mod 2
// by Q(2x) = 0.
class QuadraticForm {
public:
    QuadraticForm(std::vector<std::vector<uint8_t>> bilinear, std::vector<int> q_basis);

    int dimension() const { return n_; }
    uint8_t bilinear(int i, int j) const { return b_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int q_basis(int i) const { return q_[static_cast<size_t>(i)]; }

    QuadraticForm negated() const;  // Q -> -Q

private:
    int n_;
    std::vector<std::vector<uint8_t>> b_;
    std::vector<int> q_;
};

// Q on the vector with the given Z/2 coordinates, expanded by polarization.
int evaluate_q(const QuadraticForm& f, const std::vector<uint8_t>& v);

struct ArfResult {
    bool degenerate = false;
    int k = 0;       // Z/8 value, meaningful when not degenerate
    Rat value = 0;   // k/8 in Q/Z
};

// Exact Gauss sum over all 2^n vectors.  Zero sum reports degenerate;
// otherwise the sum is (sqrt 2)^n zeta^k and the result is k.
ArfResult arf(const QuadraticForm& f);

QuadraticForm direct_sum(const QuadraticForm& f1, const QuadraticForm& f2);

// Form file: `quadform <name> dim <n>`, n rows `B ...`, one row `q ...`.
struct NamedQuadForm {
    std::string name;
    QuadraticForm form;
};
NamedQuadForm parse_quadform(const std::string& text);
std::string emit_quadform(const std::string& name, const QuadraticForm& f);

}  // namespace gx
