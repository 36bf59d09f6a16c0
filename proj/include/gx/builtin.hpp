#pragma once

#include "gx/cochain.hpp"
#include "gx/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gx {

// A ready-made complex with its distinguished data: an orientation cycle
// when one exists, and the cochains the example is built around.
struct NamedExample {
    ComplexPtr complex;
    std::optional<SignedChain> fundamental;
    std::map<std::string, Cochain> named_cochains;
};

// Boundary of the n-simplex, n in 2..4, vertex order 0..n.
NamedExample simplex_boundary(int n);

// Six-vertex projective plane, vertex order 1..6.
NamedExample rp2();

// Seven-vertex torus, vertex order 1..7.
NamedExample torus();

// The triangulated circle bundle of the two-sphere: two solid tori glued
// over an 8x4 boundary torus with a degree-two shear, coned level disks,
// and the distinguished cochains c, p, t on it.  Vertices carry two-digit
// labels ordered lexicographically.
NamedExample t_s_sphere();

// Lookup by name: sphere1, sphere2, sphere3, rp2, torus, tss2.
NamedExample builtin_example(const std::string& name);
std::vector<std::string> builtin_names();

struct AppendixStep {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AppendixReport {
    std::vector<AppendixStep> steps;
    bool all_passed = false;
    Rat evaluation = 0;  // final value, meaningful when the steps pass
};

// The end-to-end check sequence on t_s_sphere, ending with the evaluation
// of ((1/2)c^3 + (1/4)C^3, c^2, 0) against the fundamental cycle.
AppendixReport verify_appendix();

}  // namespace gx
