#pragma once

#include "gx/numbers.hpp"

#include <cstdint>
#include <vector>

namespace gx {

// Dense matrix of unbounded integers, row-major.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> mat_vec(const IntMat& m, const std::vector<Int>& v);
std::vector<Rat> mat_vec_rat(const IntMat& m, const std::vector<Rat>& v);

// Exact determinant (Bareiss, fraction-free).  Square input required.
Int determinant(IntMat m);

// GF(2) matrix with 64-bit packed rows; the elimination routines in
// exact_linear.cpp work word-wise on these rows.
class GF2Mat {
public:
    GF2Mat() = default;
    GF2Mat(int rows, int cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), w_(static_cast<size_t>(rows_) * words_) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words() const { return words_; }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        uint64_t& w = row(r)[c >> 6];
        uint64_t bit = uint64_t(1) << (c & 63);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    uint64_t* row(int r) { return w_.data() + static_cast<size_t>(r) * words_; }
    const uint64_t* row(int r) const { return w_.data() + static_cast<size_t>(r) * words_; }

    void xor_row_into(int dst, int src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (int i = 0; i < words_; ++i) d[i] ^= s[i];
    }

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<uint64_t> w_;
};

using GF2Vec = std::vector<uint8_t>;  // one entry per coordinate, values 0/1

}  // namespace gx
