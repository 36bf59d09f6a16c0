#include "gx/cohomology.hpp"

#include <sstream>
#include <stdexcept>

namespace gx {

namespace {

GF2Mat to_gf2(const IntMat& m) {
    GF2Mat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (mod_floor(m.at(r, c), 2) != 0) out.set(r, c, true);
    return out;
}

// Everything the homology of degree k yields: summand orders, generator
// chains, and the dual covectors used to build Q/Z cocycle representatives.
struct HkData {
    int betti = 0;
    std::vector<Int> torsion;                 // invariant factors > 1
    std::vector<std::vector<Int>> chains;     // dense chain vectors, torsion then free
    std::vector<Int> orders;                  // parallel to chains: d_i or 0
    std::vector<std::vector<Int>> covectors;  // parallel: integer dual covector rows
};

HkData homology_data(const ComplexPtr& x, int k) {
    HkData out;
    const int nk = x->simplex_count(k);
    if (nk == 0) return out;
    const int nkm1 = x->simplex_count(k - 1);
    const int nkp1 = x->simplex_count(k + 1);

    IntMat bk = (k == 0) ? IntMat(0, nk) : coboundary_matrix(*x, k - 1).transposed();
    IntMat bk1 = (k == x->top_dim()) ? IntMat(nk, 0) : coboundary_matrix(*x, k).transposed();
    (void)nkm1;

    auto snfK = smith_normal_form(bk);
    const int kernel_dim = nk - snfK.rank;
    if (kernel_dim == 0) return out;

    // coordinates of boundary generators in the kernel basis (Vinv columns
    // past the rank): rows of V past the rank applied to the next boundary
    IntMat r(kernel_dim, nkp1);
    for (int i = 0; i < kernel_dim; ++i)
        for (int c = 0; c < nkp1; ++c) {
            Int acc = 0;
            for (int j = 0; j < nk; ++j) acc += snfK.V.at(snfK.rank + i, j) * bk1.at(j, c);
            r.at(i, c) = acc;
        }
    auto snfR = smith_normal_form(r);
    out.betti = kernel_dim - snfR.rank;

    // dual covectors: rows of Uinv_R composed with the kernel-index rows of V
    IntMat w(kernel_dim, nk);
    for (int i = 0; i < kernel_dim; ++i)
        for (int c = 0; c < nk; ++c) {
            Int acc = 0;
            for (int t = 0; t < kernel_dim; ++t) acc += snfR.Uinv.at(i, t) * snfK.V.at(snfK.rank + t, c);
            w.at(i, c) = acc;
        }

    auto add_summand = [&](int i, const Int& order) {
        std::vector<Int> chain(nk, 0);
        for (int j = 0; j < nk; ++j)
            for (int t = 0; t < kernel_dim; ++t)
                chain[j] += snfK.Vinv.at(j, snfK.rank + t) * snfR.U.at(t, i);
        out.chains.push_back(std::move(chain));
        out.orders.push_back(order);
        std::vector<Int> cov(nk);
        for (int c = 0; c < nk; ++c) cov[c] = w.at(i, c);
        out.covectors.push_back(std::move(cov));
    };

    for (int i = 0; i < snfR.rank; ++i) {
        const Int& s = snfR.S.at(i, i);
        if (s > 1) {
            out.torsion.push_back(s);
            add_summand(i, s);
        }
    }
    for (int i = snfR.rank; i < kernel_dim; ++i) add_summand(i, 0);
    return out;
}

AbelianGroupPresentation integer_cohomology(const ComplexPtr& x, int k) {
    AbelianGroupPresentation out;
    const int nk = x->simplex_count(k);
    if (nk == 0) return out;
    const int nkm1 = x->simplex_count(k - 1);

    IntMat dk = (k == x->top_dim()) ? IntMat(0, nk) : coboundary_matrix(*x, k);
    IntMat dkm1 = (k == 0) ? IntMat(nk, 0) : coboundary_matrix(*x, k - 1);

    auto snfK = smith_normal_form(dk);
    const int kernel_dim = nk - snfK.rank;
    if (kernel_dim == 0) return out;

    IntMat r(kernel_dim, nkm1 == 0 ? 0 : nkm1);
    for (int i = 0; i < kernel_dim; ++i)
        for (int c = 0; c < r.cols(); ++c) {
            Int acc = 0;
            for (int j = 0; j < nk; ++j) acc += snfK.V.at(snfK.rank + i, j) * dkm1.at(j, c);
            r.at(i, c) = acc;
        }
    auto snfR = smith_normal_form(r);
    out.free_rank = kernel_dim - snfR.rank;

    auto rep = [&](int i) {
        Cochain c(x, Ring::Z, k);
        for (int j = 0; j < nk; ++j) {
            Int acc = 0;
            for (int t = 0; t < kernel_dim; ++t)
                acc += snfK.Vinv.at(j, snfK.rank + t) * snfR.U.at(t, i);
            c.set(j, Rat(acc));
        }
        return c;
    };

    for (int i = 0; i < snfR.rank; ++i) {
        const Int& s = snfR.S.at(i, i);
        if (s > 1) {
            out.torsion.push_back(s);
            out.basis_cocycles.push_back(rep(i));
        }
    }
    for (int i = snfR.rank; i < kernel_dim; ++i) out.basis_cocycles.push_back(rep(i));
    return out;
}

// H^k with Z/n coefficients as a lattice quotient: the kernel lattice of
// (d_k mod n) over the lattice spanned by integral coboundaries and n Z.
AbelianGroupPresentation mod_n_cohomology(const ComplexPtr& x, int k, const Int& n, Ring ring) {
    AbelianGroupPresentation out;
    const int nk = x->simplex_count(k);
    if (nk == 0) return out;

    IntMat dk = (k == x->top_dim()) ? IntMat(0, nk) : coboundary_matrix(*x, k);
    IntMat dkm1 = (k == 0) ? IntMat(nk, 0) : coboundary_matrix(*x, k - 1);

    auto snfK = smith_normal_form(dk);
    // generators of { v : d_k v = 0 mod n }: Vinv . diag(n / gcd(s_i, n))
    IntMat kgen(nk, nk);
    for (int j = 0; j < nk; ++j) {
        Int s = (j < std::min(dk.rows(), nk)) ? snfK.S.at(j, j) : Int(0);
        Int c = n / boost::multiprecision::gcd(s, n);
        for (int i = 0; i < nk; ++i) kgen.at(i, j) = snfK.Vinv.at(i, j) * c;
    }
    auto snf1 = smith_normal_form(kgen);
    if (snf1.rank != nk) throw std::logic_error("mod-n kernel lattice is not full rank");

    // denominator lattice: integral coboundaries and n I, in kernel coordinates
    const int m0 = dkm1.cols();
    IntMat gens(nk, m0 + nk);
    for (int i = 0; i < nk; ++i) {
        for (int c = 0; c < m0; ++c) gens.at(i, c) = dkm1.at(i, c);
        gens.at(i, m0 + i) = n;
    }
    IntMat coords(nk, m0 + nk);
    for (int i = 0; i < nk; ++i)
        for (int c = 0; c < m0 + nk; ++c) {
            Int acc = 0;
            for (int t = 0; t < nk; ++t) acc += snf1.Uinv.at(i, t) * gens.at(t, c);
            if (acc % snf1.S.at(i, i) != 0) throw std::logic_error("denominator lattice escapes the kernel lattice");
            coords.at(i, c) = acc / snf1.S.at(i, i);
        }
    auto snf2 = smith_normal_form(coords);
    if (snf2.rank != nk) throw std::logic_error("mod-n cohomology is not n-torsion");

    for (int i = 0; i < nk; ++i) {
        const Int& s = snf2.S.at(i, i);
        if (s <= 1) continue;
        if (n % s != 0) throw std::logic_error("invariant factor does not divide the modulus");
        out.torsion.push_back(s);
        Cochain c(x, ring, k);
        for (int j = 0; j < nk; ++j) {
            Int acc = 0;
            for (int t = 0; t < nk; ++t) acc += snf1.U.at(j, t) * snf1.S.at(t, t) * snf2.U.at(t, i);
            c.add(j, Rat(acc));
        }
        out.basis_cocycles.push_back(c);
    }
    return out;
}

}  // namespace

std::string AbelianGroupPresentation::to_string() const {
    std::vector<std::string> parts;
    if (free_rank > 0) parts.push_back("Z^" + std::to_string(free_rank));
    if (circle_rank > 0) parts.push_back("(Q/Z)^" + std::to_string(circle_rank));
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << " x ";
        out << parts[i];
    }
    return out.str();
}

AbelianGroupPresentation homology(const ComplexPtr& x, int k) {
    if (k < 0) throw std::invalid_argument("negative homology degree");
    AbelianGroupPresentation out;
    if (k > x->top_dim()) return out;
    auto data = homology_data(x, k);
    out.free_rank = data.betti;
    out.torsion = data.torsion;
    return out;
}

HomologyBasis homology_basis(const ComplexPtr& x, int k) {
    if (k < 0) throw std::invalid_argument("negative homology degree");
    HomologyBasis out;
    if (k > x->top_dim()) return out;
    auto data = homology_data(x, k);
    for (size_t i = 0; i < data.chains.size(); ++i) {
        SignedChain c(x, k);
        for (size_t j = 0; j < data.chains[i].size(); ++j) c.set(static_cast<int>(j), data.chains[i][j]);
        out.chains.push_back(std::move(c));
        out.orders.push_back(data.orders[i]);
    }
    return out;
}

AbelianGroupPresentation cohomology(const ComplexPtr& x, Ring coeff, int k) {
    if (k < 0) throw std::invalid_argument("negative cohomology degree");
    AbelianGroupPresentation out;
    if (k > x->top_dim()) return out;

    switch (coeff) {
        case Ring::Z:
            return integer_cohomology(x, k);
        case Ring::Z2: {
            GF2Cohomology h(x, k);
            for (int i = 0; i < h.dimension(); ++i) {
                out.torsion.push_back(2);
                out.basis_cocycles.push_back(h.basis_cochain(i));
            }
            return out;
        }
        case Ring::Z4:
            return mod_n_cohomology(x, k, 4, Ring::Z4);
        case Ring::QZ: {
            auto data = homology_data(x, k);
            out.circle_rank = data.betti;
            out.torsion = data.torsion;
            for (size_t i = 0; i < data.chains.size(); ++i) {
                if (data.orders[i] != 0) {
                    Cochain c(x, Ring::QZ, k);
                    for (size_t j = 0; j < data.covectors[i].size(); ++j)
                        c.set(static_cast<int>(j), Rat(data.covectors[i][j], data.orders[i]));
                    out.basis_cocycles.push_back(std::move(c));
                }
            }
            // circle summands carry their integer dual covector
            for (size_t i = 0; i < data.chains.size(); ++i) {
                if (data.orders[i] == 0) {
                    Cochain c(x, Ring::Z, k);
                    for (size_t j = 0; j < data.covectors[i].size(); ++j)
                        c.set(static_cast<int>(j), Rat(data.covectors[i][j]));
                    out.basis_cocycles.push_back(std::move(c));
                }
            }
            return out;
        }
    }
    throw std::invalid_argument("unknown coefficient ring");
}

GF2Cohomology::GF2Cohomology(const ComplexPtr& x, int k) : x_(x), k_(k) {
    if (k < 0) throw std::invalid_argument("negative cohomology degree");
    const int n = x->simplex_count(k);
    if (n == 0) return;

    // RREF of the coboundary image from degree k-1
    if (k > 0) {
        IntMat dkm1 = coboundary_matrix(*x, k - 1);
        for (int c = 0; c < dkm1.cols(); ++c) {
            GF2Vec v(n, 0);
            for (int r = 0; r < n; ++r) v[r] = static_cast<uint8_t>(mod_floor(dkm1.at(r, c), 2) != 0 ? 1 : 0);
            v = reduce_by_image(v);
            int pivot = -1;
            for (int i = 0; i < n; ++i)
                if (v[i]) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            for (size_t t = 0; t < image_rref_.size(); ++t)
                if (image_rref_[t][pivot])
                    for (int i = 0; i < n; ++i) image_rref_[t][i] ^= v[i];
            image_rref_.push_back(v);
            image_pivots_.push_back(pivot);
        }
    }

    // kernel of d_k over GF(2)
    std::vector<GF2Vec> kernel;
    if (k == x->top_dim()) {
        for (int i = 0; i < n; ++i) {
            GF2Vec e(n, 0);
            e[i] = 1;
            kernel.push_back(e);
        }
    } else {
        auto a = to_gf2(coboundary_matrix(*x, k));
        kernel = solve_gf2(a, GF2Vec(a.rows(), 0)).kernel;
    }

    for (const auto& z : kernel) {
        GF2Vec r = reduce_by_image(z);
        GF2Vec combo(basis_.size(), 0);
        for (size_t t = 0; t < aux_rows_.size(); ++t) {
            if (!r[aux_pivots_[t]]) continue;
            for (int i = 0; i < n; ++i) r[i] ^= aux_rows_[t][i];
            combo.resize(std::max(combo.size(), aux_combos_[t].size()), 0);
            for (size_t i = 0; i < aux_combos_[t].size(); ++i) combo[i] ^= aux_combos_[t][i];
        }
        int pivot = -1;
        for (int i = 0; i < n; ++i)
            if (r[i]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        basis_.push_back(z);
        combo.resize(basis_.size(), 0);
        combo[basis_.size() - 1] = 1;
        aux_rows_.push_back(r);
        aux_pivots_.push_back(pivot);
        aux_combos_.push_back(combo);
    }
}

GF2Vec GF2Cohomology::reduce_by_image(GF2Vec v) const {
    for (size_t t = 0; t < image_rref_.size(); ++t) {
        if (!v[image_pivots_[t]]) continue;
        for (size_t i = 0; i < v.size(); ++i) v[i] ^= image_rref_[t][i];
    }
    return v;
}

Cochain GF2Cohomology::basis_cochain(int i) const { return Cochain::from_gf2(x_, k_, basis_[i]); }

GF2Vec GF2Cohomology::coordinates(const Cochain& cocycle) const {
    if (cocycle.complex() != x_ || cocycle.degree() != k_ || cocycle.ring() != Ring::Z2)
        throw std::invalid_argument("coordinates: wrong complex, degree, or ring");
    if (!d(cocycle).is_zero()) throw std::invalid_argument("coordinates: not a cocycle");
    GF2Vec r = reduce_by_image(cocycle.gf2());
    GF2Vec combo(basis_.size(), 0);
    for (size_t t = 0; t < aux_rows_.size(); ++t) {
        if (!r[aux_pivots_[t]]) continue;
        for (size_t i = 0; i < r.size(); ++i) r[i] ^= aux_rows_[t][i];
        for (size_t i = 0; i < aux_combos_[t].size(); ++i) combo[i] ^= aux_combos_[t][i];
    }
    for (uint8_t bit : r)
        if (bit) throw std::logic_error("cocycle escapes the computed basis");
    combo.resize(basis_.size(), 0);
    return combo;
}

bool GF2Cohomology::is_coboundary(const Cochain& cocycle) const {
    auto c = coordinates(cocycle);
    for (uint8_t bit : c)
        if (bit) return false;
    return true;
}

Rat pair_qz(const Cochain& w, const SignedChain& h) {
    if (w.complex() != h.complex() || w.degree() != h.degree())
        throw std::invalid_argument("pairing: complex or degree mismatch");
    Rat acc = 0;
    for (const auto& [i, c] : h.terms()) acc += Rat(c) * w.value(i);
    return mod1(acc);
}

bool qz_class_is_zero(const Cochain& w, const HomologyBasis& hb) {
    for (const auto& h : hb.chains)
        if (pair_qz(w, h) != 0) return false;
    return true;
}

}  // namespace gx
