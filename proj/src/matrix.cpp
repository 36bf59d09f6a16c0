#include "gx/matrix.hpp"

#include <stdexcept>

namespace gx {

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMat p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Int& x = at(r, k);
            if (x == 0) continue;
            for (int c = 0; c < o.cols_; ++c) {
                const Int& y = o.at(k, c);
                if (y != 0) p.at(r, c) += x * y;
            }
        }
    return p;
}

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<Int> out(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

std::vector<Rat> mat_vec_rat(const IntMat& m, const std::vector<Rat>& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("mat_vec shape mismatch");
    std::vector<Rat> out(m.rows());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += Rat(m.at(r, c)) * v[c];
    return out;
}

Int determinant(IntMat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    swap = r;
                    break;
                }
            if (swap < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c)
                m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) / prev;
            m.at(r, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

}  // namespace gx
