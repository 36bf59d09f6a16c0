#pragma once

#include "gx/matrix.hpp"

#include <optional>
#include <vector>

namespace gx {

// A = U * S * V with U, V unimodular and S diagonal, s1 | s2 | ... >= 0.
// Uinv and Vinv are maintained during the reduction so callers never invert.
struct SNFDecomposition {
    IntMat U, S, V;
    IntMat Uinv, Vinv;
    int rank = 0;  // number of nonzero diagonal entries
};

SNFDecomposition smith_normal_form(const IntMat& A);

// SNF of the transpose, derived without recomputation.
SNFDecomposition transpose_snf(const SNFDecomposition& snf);

struct GF2Solve {
    bool solvable = false;
    GF2Vec x;                    // one solution, valid iff solvable
    std::vector<GF2Vec> kernel;  // basis of ker A, always filled
};

GF2Solve solve_gf2(const GF2Mat& A, const GF2Vec& b);

// x with A x = b (mod n), entries of x in [0, n).
std::optional<std::vector<Int>> solve_mod_n(const IntMat& A, const std::vector<Int>& b, const Int& n);
std::optional<std::vector<Int>> solve_mod_n(const SNFDecomposition& snf, const std::vector<Int>& b, const Int& n);

// x integer with A x = b, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_integer(const SNFDecomposition& snf, const std::vector<Int>& b);

// Decides b in A . (Q/Z)^c, entries of b taken mod 1.  On success returns a
// preimage with entries in [0, 1).  Membership test: with A = U S V and a
// rational lift bhat, the coordinates of Uinv . bhat at zero diagonal
// positions of S must all be integers.
std::optional<std::vector<Rat>> image_membership_qz(const IntMat& A, const std::vector<Rat>& b);
std::optional<std::vector<Rat>> image_membership_qz(const SNFDecomposition& snf, const std::vector<Rat>& b);

// Decides b in A . (Q/Z)^c + Z-span(gens), entries mod 1.  Every generator
// must satisfy 2 g = 0 mod 1.  The rational column space of A is projected
// away via the zero rows of the Smith form; what remains is an integer
// lattice membership problem solved by a second SNF.
bool affine_coboundary_membership(const IntMat& A, const std::vector<Rat>& b,
                                  const std::vector<std::vector<Rat>>& gens);
bool affine_coboundary_membership(const SNFDecomposition& snf, const std::vector<Rat>& b,
                                  const std::vector<std::vector<Rat>>& gens);

}  // namespace gx
