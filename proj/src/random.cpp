#include "gx/random.hpp"

#include "gx/exact_linear.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace gx {

ComplexPtr random_complex(Rng& rng, int max_vertices, int max_dim) {
    const int nv = static_cast<int>(rng.range(2, max_vertices));
    std::vector<std::string> names;
    for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));

    std::set<Simplex> chosen;
    const int count = static_cast<int>(rng.range(1, 2 * nv));
    for (int t = 0; t < count; ++t) {
        int dim = static_cast<int>(rng.range(1, std::min(max_dim, nv - 1)));
        std::vector<int> pool(nv);
        for (int i = 0; i < nv; ++i) pool[i] = i;
        // partial shuffle for a uniform (dim+1)-subset
        for (int i = 0; i <= dim; ++i) {
            int j = i + static_cast<int>(rng.next(static_cast<uint64_t>(nv - i)));
            std::swap(pool[i], pool[j]);
        }
        Simplex s(pool.begin(), pool.begin() + dim + 1);
        std::sort(s.begin(), s.end());
        chosen.insert(s);
    }
    std::vector<Simplex> list(chosen.begin(), chosen.end());
    return OrderedComplex::build("random", names, list);
}

Cochain random_cochain(Rng& rng, const ComplexPtr& cx, Ring ring, int degree) {
    Cochain c(cx, ring, degree);
    for (int i = 0; i < cx->simplex_count(degree); ++i) {
        switch (ring) {
            case Ring::Z: c.set(i, Rat(rng.range(-4, 4))); break;
            case Ring::Z2: c.set(i, Rat(rng.range(0, 1))); break;
            case Ring::Z4: c.set(i, Rat(rng.range(0, 3))); break;
            case Ring::QZ: c.set(i, Rat(rng.range(0, 7), 8)); break;
        }
    }
    return c;
}

Cochain random_cocycle_z2(Rng& rng, const ComplexPtr& cx, int degree) {
    const int n = cx->simplex_count(degree);
    const int m = cx->simplex_count(degree + 1);
    GF2Mat a(m, n);
    auto dm = coboundary_matrix(*cx, degree);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (mod_floor(dm.at(r, c), 2) != 0) a.set(r, c, true);
    auto sol = solve_gf2(a, GF2Vec(m, 0));
    GF2Vec v(n, 0);
    for (const auto& z : sol.kernel)
        if (rng.flip())
            for (int i = 0; i < n; ++i) v[i] ^= z[i];
    return Cochain::from_gf2(cx, degree, v);
}

Cochain random_cocycle_z(Rng& rng, const ComplexPtr& cx, int degree) {
    const int n = cx->simplex_count(degree);
    Cochain c(cx, Ring::Z, degree);
    if (n == 0) return c;
    auto snf = smith_normal_form(coboundary_matrix(*cx, degree));
    // kernel basis: columns of Vinv past the rank
    for (int j = snf.rank; j < n; ++j) {
        Int k = rng.range(-2, 2);
        if (k == 0) continue;
        for (int i = 0; i < n; ++i) c.add(i, Rat(k * snf.Vinv.at(i, j)));
    }
    return c;
}

Cochain random_cochain_qz8(Rng& rng, const ComplexPtr& cx, int degree) {
    return random_cochain(rng, cx, Ring::QZ, degree);
}

}  // namespace gx
