#include "gx/exact_linear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gx {

namespace {

// Working state for the Smith reduction, maintaining A = U * S * V throughout.
struct SmithState {
    IntMat S, U, Uinv, V, Vinv;

    void row_swap(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < S.cols(); ++c) std::swap(S.at(i, c), S.at(j, c));
        for (int r = 0; r < U.rows(); ++r) std::swap(U.at(r, i), U.at(r, j));
        for (int c = 0; c < Uinv.cols(); ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    }

    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < S.rows(); ++r) std::swap(S.at(r, i), S.at(r, j));
        for (int c = 0; c < V.cols(); ++c) std::swap(V.at(i, c), V.at(j, c));
        for (int r = 0; r < Vinv.rows(); ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    }

    void row_negate(int i) {
        for (int c = 0; c < S.cols(); ++c) S.at(i, c) = -S.at(i, c);
        for (int r = 0; r < U.rows(); ++r) U.at(r, i) = -U.at(r, i);
        for (int c = 0; c < Uinv.cols(); ++c) Uinv.at(i, c) = -Uinv.at(i, c);
    }

    // row_i += k * row_j on S
    void row_add(int i, int j, const Int& k) {
        if (k == 0) return;
        for (int c = 0; c < S.cols(); ++c)
            if (S.at(j, c) != 0) S.at(i, c) += k * S.at(j, c);
        for (int r = 0; r < U.rows(); ++r)
            if (U.at(r, i) != 0) U.at(r, j) -= k * U.at(r, i);
        for (int c = 0; c < Uinv.cols(); ++c)
            if (Uinv.at(j, c) != 0) Uinv.at(i, c) += k * Uinv.at(j, c);
    }

    // col_j += k * col_i on S
    void col_add(int j, int i, const Int& k) {
        if (k == 0) return;
        for (int r = 0; r < S.rows(); ++r)
            if (S.at(r, i) != 0) S.at(r, j) += k * S.at(r, i);
        for (int c = 0; c < V.cols(); ++c)
            if (V.at(j, c) != 0) V.at(i, c) -= k * V.at(j, c);
        for (int r = 0; r < Vinv.rows(); ++r)
            if (Vinv.at(r, i) != 0) Vinv.at(r, j) += k * Vinv.at(r, i);
    }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SNFDecomposition smith_normal_form(const IntMat& A) {
    const int rows = A.rows(), cols = A.cols();
    SmithState st;
    st.S = A;
    st.U = IntMat::identity(rows);
    st.Uinv = IntMat::identity(rows);
    st.V = IntMat::identity(cols);
    st.Vinv = IntMat::identity(cols);

    const int lim = std::min(rows, cols);
    int t = 0;
    for (; t < lim; ++t) {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        int pr = -1, pc = -1;
        Int best;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                const Int& v = st.S.at(r, c);
                if (v == 0) continue;
                Int a = abs_int(v);
                if (pr < 0 || a < best) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // trailing submatrix is zero
        st.row_swap(t, pr);
        st.col_swap(t, pc);

        // Clear row and column t; pivot refinement by Euclid.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int r = t + 1; r < rows; ++r) {
                if (st.S.at(r, t) == 0) continue;
                Int q = st.S.at(r, t) / st.S.at(t, t);
                st.row_add(r, t, -q);
                if (st.S.at(r, t) != 0) {
                    // remainder became the smaller entry: promote it
                    st.row_swap(t, r);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (st.S.at(t, c) == 0) continue;
                Int q = st.S.at(t, c) / st.S.at(t, t);
                st.col_add(c, t, -q);
                if (st.S.at(t, c) != 0) {
                    st.col_swap(t, c);
                    dirty = true;
                }
            }
        }

        if (st.S.at(t, t) < 0) st.row_negate(t);

        // Ensure the pivot divides the rest of the submatrix.
        bool restart = false;
        for (int r = t + 1; r < rows && !restart; ++r)
            for (int c = t + 1; c < cols; ++c)
                if (st.S.at(r, c) % st.S.at(t, t) != 0) {
                    st.row_add(t, r, 1);
                    restart = true;
                    break;
                }
        if (restart) --t;  // redo this pivot position with the polluted row
    }

    SNFDecomposition out;
    out.S = std::move(st.S);
    out.U = std::move(st.U);
    out.Uinv = std::move(st.Uinv);
    out.V = std::move(st.V);
    out.Vinv = std::move(st.Vinv);
    out.rank = 0;
    for (int i = 0; i < lim; ++i)
        if (out.S.at(i, i) != 0) ++out.rank;
    return out;
}

SNFDecomposition transpose_snf(const SNFDecomposition& snf) {
    SNFDecomposition t;
    t.U = snf.V.transposed();
    t.S = snf.S.transposed();
    t.V = snf.U.transposed();
    t.Uinv = snf.Vinv.transposed();
    t.Vinv = snf.Uinv.transposed();
    t.rank = snf.rank;
    return t;
}

GF2Solve solve_gf2(const GF2Mat& A, const GF2Vec& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve_gf2 shape mismatch");
    const int rows = A.rows(), cols = A.cols();
    GF2Mat m = A;
    GF2Vec rhs = b;

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(cols, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m.get(r, c)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != rank) {
            for (int w = 0; w < m.words(); ++w) std::swap(m.row(pr)[w], m.row(rank)[w]);
            std::swap(rhs[pr], rhs[rank]);
        }
        for (int r = 0; r < rows; ++r)
            if (r != rank && m.get(r, c)) {
                m.xor_row_into(r, rank);
                rhs[r] ^= rhs[rank];
            }
        pivot_row_of_col[c] = rank;
        pivot_col_of_row.push_back(c);
        ++rank;
    }

    GF2Solve out;
    out.solvable = true;
    for (int r = rank; r < rows; ++r)
        if (rhs[r]) out.solvable = false;
    if (out.solvable) {
        out.x.assign(cols, 0);
        for (int r = 0; r < rank; ++r) out.x[pivot_col_of_row[r]] = rhs[r];
    }
    for (int c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        GF2Vec k(cols, 0);
        k[c] = 1;
        for (int pc = 0; pc < cols; ++pc) {
            int r = pivot_row_of_col[pc];
            if (r >= 0 && m.get(r, c)) k[pc] = 1;
        }
        out.kernel.push_back(std::move(k));
    }
    return out;
}

namespace {

// Extended Euclid: returns g = gcd(a, b) and x with a x = g (mod b), b > 0.
Int mod_inverse_scaled(const Int& a, const Int& b, Int& g) {
    Int old_r = a, r = b, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
    }
    g = old_r;
    return b == 0 ? old_s : mod_floor(old_s, b);
}

}  // namespace

std::optional<std::vector<Int>> solve_mod_n(const SNFDecomposition& snf, const std::vector<Int>& b, const Int& n) {
    if (n <= 0) throw std::invalid_argument("solve_mod_n: modulus must be positive");
    const int rows = snf.S.rows(), cols = snf.S.cols();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve_mod_n shape mismatch");
    std::vector<Int> y = mat_vec(snf.Uinv, b);
    std::vector<Int> z(cols, 0);
    const int lim = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        Int yi = mod_floor(y[i], n);
        const Int s = (i < lim) ? snf.S.at(i, i) : Int(0);
        if (s == 0) {
            if (yi != 0) return std::nullopt;
            continue;
        }
        Int g;
        Int inv = mod_inverse_scaled(s, n, g);
        if (yi % g != 0) return std::nullopt;
        // s * z = y (mod n): z = (y/g) * inv(s/g) (mod n/g), where inv solves s*inv = g (mod n)
        z[i] = mod_floor((yi / g) * inv, n);
    }
    std::vector<Int> x = mat_vec(snf.Vinv, z);
    for (auto& v : x) v = mod_floor(v, n);
    return x;
}

std::optional<std::vector<Int>> solve_mod_n(const IntMat& A, const std::vector<Int>& b, const Int& n) {
    return solve_mod_n(smith_normal_form(A), b, n);
}

std::optional<std::vector<Int>> solve_integer(const SNFDecomposition& snf, const std::vector<Int>& b) {
    const int rows = snf.S.rows(), cols = snf.S.cols();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solve_integer shape mismatch");
    std::vector<Int> y = mat_vec(snf.Uinv, b);
    std::vector<Int> z(cols, 0);
    const int lim = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Int s = (i < lim) ? snf.S.at(i, i) : Int(0);
        if (s == 0) {
            if (y[i] != 0) return std::nullopt;
            continue;
        }
        if (y[i] % s != 0) return std::nullopt;
        z[i] = y[i] / s;
    }
    return mat_vec(snf.Vinv, z);
}

std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(A), b);
}

std::optional<std::vector<Rat>> image_membership_qz(const SNFDecomposition& snf, const std::vector<Rat>& b) {
    const int rows = snf.S.rows(), cols = snf.S.cols();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("image_membership_qz shape mismatch");
    std::vector<Rat> y = mat_vec_rat(snf.Uinv, b);
    const int lim = std::min(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Int s = (i < lim) ? snf.S.at(i, i) : Int(0);
        if (s == 0 && !is_integer(y[i])) return std::nullopt;
    }
    std::vector<Rat> z(cols);
    for (int i = 0; i < lim; ++i) {
        const Int s = snf.S.at(i, i);
        if (s != 0) z[i] = y[i] / Rat(s);
    }
    std::vector<Rat> x = mat_vec_rat(snf.Vinv, z);
    for (auto& v : x) v = mod1(v);
    return x;
}

std::optional<std::vector<Rat>> image_membership_qz(const IntMat& A, const std::vector<Rat>& b) {
    return image_membership_qz(smith_normal_form(A), b);
}

bool affine_coboundary_membership(const SNFDecomposition& snf, const std::vector<Rat>& b,
                                  const std::vector<std::vector<Rat>>& gens) {
    const int rows = snf.S.rows();
    if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("affine membership shape mismatch");
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != rows) throw std::invalid_argument("affine membership generator shape mismatch");
        for (const auto& v : g)
            if (!is_integer(Rat(v * 2))) throw std::invalid_argument("affine membership generator is not 2-torsion");
    }

    // Zero rows of S in Uinv-coordinates carry the quotient by the rational
    // column space of A.
    std::vector<int> zrows;
    const int lim = std::min(rows, snf.S.cols());
    for (int i = 0; i < rows; ++i) {
        const Int s = (i < lim) ? snf.S.at(i, i) : Int(0);
        if (s == 0) zrows.push_back(i);
    }
    if (zrows.empty()) return true;

    std::vector<Rat> y = mat_vec_rat(snf.Uinv, b);
    std::vector<std::vector<Rat>> gy;
    gy.reserve(gens.size());
    for (const auto& g : gens) gy.push_back(mat_vec_rat(snf.Uinv, g));

    const int d = static_cast<int>(zrows.size());
    Int m = 1;
    for (int i : zrows) m = boost::multiprecision::lcm(m, rat_den(y[i]));
    for (const auto& g : gy)
        for (int i : zrows) m = boost::multiprecision::lcm(m, rat_den(g[i]));

    // v = m*y_Z must lie in the lattice spanned by m*gens_Z and m*Z^d.
    IntMat M(d, static_cast<int>(gens.size()) + d);
    std::vector<Int> v(d);
    for (int r = 0; r < d; ++r) {
        v[r] = rat_num(y[zrows[r]] * Rat(m));
        for (size_t j = 0; j < gy.size(); ++j) M.at(r, static_cast<int>(j)) = rat_num(gy[j][zrows[r]] * Rat(m));
        M.at(r, static_cast<int>(gy.size()) + r) = m;
    }
    return solve_integer(M, v).has_value();
}

bool affine_coboundary_membership(const IntMat& A, const std::vector<Rat>& b,
                                  const std::vector<std::vector<Rat>>& gens) {
    return affine_coboundary_membership(smith_normal_form(A), b, gens);
}

}  // namespace gx
