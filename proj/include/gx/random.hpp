#pragma once

#include "gx/cochain.hpp"
#include "gx/simplicial.hpp"

#include <cstdint>
#include <random>

namespace gx {

// Deterministic across platforms: raw mt19937_64 output reduced explicitly,
// no standard-library distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next(uint64_t n) { return eng_() % n; }
    int64_t range(int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(next(static_cast<uint64_t>(hi - lo + 1))); }
    bool flip() { return next(2) != 0; }

private:
    std::mt19937_64 eng_;
};

// Random complex on <= max_vertices vertices with simplices of dimension
// <= max_dim; always contains all vertices, never empty.
ComplexPtr random_complex(Rng& rng, int max_vertices, int max_dim);

Cochain random_cochain(Rng& rng, const ComplexPtr& cx, Ring ring, int degree);

// Uniform element of the kernel of d over Z/2 in the given degree.
Cochain random_cocycle_z2(Rng& rng, const ComplexPtr& cx, int degree);

// Random small integer combination of a kernel basis of d over Z.
Cochain random_cocycle_z(Rng& rng, const ComplexPtr& cx, int degree);

// Random Q/Z cochain with denominators dividing 8.
Cochain random_cochain_qz8(Rng& rng, const ComplexPtr& cx, int degree);

}  // namespace gx
