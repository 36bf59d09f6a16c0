#include "gx/arf.hpp"

#include "gx/limits.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gx {

Zeta8Integer Zeta8Integer::zeta_power(int k) {
    k = ((k % 8) + 8) % 8;
    Zeta8Integer z;
    if (k < 4)
        z.c[k] = 1;
    else
        z.c[k - 4] = -1;
    return z;
}

Zeta8Integer Zeta8Integer::sqrt2() {
    Zeta8Integer z;
    z.c[1] = 1;
    z.c[3] = -1;
    return z;
}

Zeta8Integer Zeta8Integer::operator+(const Zeta8Integer& o) const {
    Zeta8Integer r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Zeta8Integer Zeta8Integer::operator-(const Zeta8Integer& o) const {
    Zeta8Integer r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Zeta8Integer Zeta8Integer::operator*(const Zeta8Integer& o) const {
    Zeta8Integer r;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.c[j] == 0) continue;
            int e = i + j;
            if (e < 4)
                r.c[e] += c[i] * o.c[j];
            else
                r.c[e - 4] -= c[i] * o.c[j];
        }
    }
    return r;
}

bool Zeta8Integer::operator==(const Zeta8Integer& o) const {
    for (int i = 0; i < 4; ++i)
        if (c[i] != o.c[i]) return false;
    return true;
}

bool Zeta8Integer::is_zero() const {
    for (int i = 0; i < 4; ++i)
        if (c[i] != 0) return false;
    return true;
}

Zeta8Integer Zeta8Integer::conjugate() const {
    Zeta8Integer r;
    r.c[0] = c[0];
    r.c[1] = -c[3];
    r.c[2] = -c[2];
    r.c[3] = -c[1];
    return r;
}

Int Zeta8Integer::norm_squared() const {
    Zeta8Integer p = *this * conjugate();
    if (p.c[1] != 0 || p.c[2] != 0 || p.c[3] != 0)
        throw std::logic_error("norm of a cyclotomic integer is not rational");
    return p.c[0];
}

std::string Zeta8Integer::to_string() const {
    std::ostringstream out;
    out << "(" << c[0] << ", " << c[1] << ", " << c[2] << ", " << c[3] << ")";
    return out.str();
}

QuadraticForm::QuadraticForm(std::vector<std::vector<uint8_t>> bilinear, std::vector<int> q_basis)
    : n_(static_cast<int>(q_basis.size())), b_(std::move(bilinear)), q_(std::move(q_basis)) {
    if (static_cast<int>(b_.size()) != n_) throw std::invalid_argument("bilinear matrix is not n by n");
    for (auto& row : b_) {
        if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("bilinear matrix is not n by n");
        for (uint8_t x : row)
            if (x > 1) throw std::invalid_argument("bilinear entries must be 0 or 1");
    }
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < i; ++j)
            if (b_[static_cast<size_t>(i)][static_cast<size_t>(j)] != b_[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::invalid_argument("bilinear form is not symmetric");
    for (auto& v : q_) v = ((v % 4) + 4) % 4;
    for (int i = 0; i < n_; ++i)
        if (b_[static_cast<size_t>(i)][static_cast<size_t>(i)] % 2 != q_[static_cast<size_t>(i)] % 2)
            throw std::invalid_argument("diagonal of the bilinear form must agree with q mod 2");
}

QuadraticForm QuadraticForm::negated() const {
    std::vector<int> q = q_;
    for (auto& v : q) v = (4 - v) % 4;
    return QuadraticForm(b_, q);
}

int evaluate_q(const QuadraticForm& f, const std::vector<uint8_t>& v) {
    const int n = f.dimension();
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length mismatch");
    int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (!(v[static_cast<size_t>(i)] & 1)) continue;
        acc += f.q_basis(i);
        for (int j = i + 1; j < n; ++j)
            if (v[static_cast<size_t>(j)] & 1) acc += 2 * f.bilinear(i, j);
    }
    return acc % 4;
}

ArfResult arf(const QuadraticForm& f) {
    const int n = f.dimension();
    const int cap = dim_cap(24);
    if (n > cap)
        throw std::runtime_error("arf: dimension " + std::to_string(n) + " exceeds the exhaustive cap " +
                                 std::to_string(cap) + "; raise GX_MAX_DIM to allow the 2^n sum");

    std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (f.bilinear(i, j)) rows[static_cast<size_t>(i)] |= (uint32_t{1} << j);

    // Gray-code walk: one basis flip per step keeps the update local.
    Int tally[4] = {0, 0, 0, 0};
    uint32_t x = 0;
    int qcur = 0;
    tally[0] += 1;
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t m = 1; m < total; ++m) {
        const int i = std::countr_zero(m);
        const uint32_t bit = uint32_t{1} << i;
        const uint32_t rest = x & ~bit;
        const int delta = f.q_basis(i) + 2 * (std::popcount(rest & rows[static_cast<size_t>(i)]) & 1);
        qcur = (x & bit) ? qcur - delta : qcur + delta;
        qcur = ((qcur % 4) + 4) % 4;
        x ^= bit;
        tally[qcur] += 1;
    }

    Zeta8Integer s;
    s.c[0] = tally[0] - tally[2];
    s.c[2] = tally[1] - tally[3];

    ArfResult out;
    if (s.is_zero() || s.norm_squared() != (Int(1) << n)) {
        // zero sum, or a bilinear radical on which q vanishes
        out.degenerate = true;
        return out;
    }
    Zeta8Integer scale(Int(1));
    for (int i = 0; i < n; ++i) scale = scale * Zeta8Integer::sqrt2();
    for (int k = 0; k < 8; ++k) {
        if (scale * Zeta8Integer::zeta_power(k) == s) {
            out.k = k;
            out.value = mod1(Rat(k, 8));
            return out;
        }
    }
    throw std::logic_error("gauss sum of the expected modulus is not a root-of-unity multiple");
}

QuadraticForm direct_sum(const QuadraticForm& f1, const QuadraticForm& f2) {
    const int n1 = f1.dimension(), n2 = f2.dimension();
    std::vector<std::vector<uint8_t>> b(static_cast<size_t>(n1 + n2), std::vector<uint8_t>(static_cast<size_t>(n1 + n2), 0));
    std::vector<int> q(static_cast<size_t>(n1 + n2), 0);
    for (int i = 0; i < n1; ++i) {
        q[static_cast<size_t>(i)] = f1.q_basis(i);
        for (int j = 0; j < n1; ++j) b[static_cast<size_t>(i)][static_cast<size_t>(j)] = f1.bilinear(i, j);
    }
    for (int i = 0; i < n2; ++i) {
        q[static_cast<size_t>(n1 + i)] = f2.q_basis(i);
        for (int j = 0; j < n2; ++j) b[static_cast<size_t>(n1 + i)][static_cast<size_t>(n1 + j)] = f2.bilinear(i, j);
    }
    return QuadraticForm(std::move(b), std::move(q));
}

namespace {

[[noreturn]] void qf_error(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

NamedQuadForm parse_quadform(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string name;
    int n = -1;
    std::vector<std::vector<uint8_t>> b;
    std::vector<int> q;
    bool have_q = false;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks.size() != 4 || toks[0] != "quadform" || toks[2] != "dim")
                qf_error(lineno, "expected 'quadform <name> dim <n>'");
            name = toks[1];
            try {
                n = std::stoi(toks[3]);
            } catch (const std::exception&) {
                qf_error(lineno, "malformed dimension");
            }
            if (n < 0) qf_error(lineno, "negative dimension");
            have_header = true;
            continue;
        }

        if (toks[0] == "B") {
            if (static_cast<int>(b.size()) >= n) qf_error(lineno, "too many B rows");
            if (static_cast<int>(toks.size()) != n + 1) qf_error(lineno, "B row needs exactly n entries");
            std::vector<uint8_t> row;
            for (int i = 1; i <= n; ++i) {
                if (toks[static_cast<size_t>(i)] != "0" && toks[static_cast<size_t>(i)] != "1")
                    qf_error(lineno, "B entries must be 0 or 1");
                row.push_back(toks[static_cast<size_t>(i)] == "1" ? 1 : 0);
            }
            b.push_back(std::move(row));
            continue;
        }
        if (toks[0] == "q") {
            if (have_q) qf_error(lineno, "duplicate q row");
            if (static_cast<int>(toks.size()) != n + 1) qf_error(lineno, "q row needs exactly n entries");
            for (int i = 1; i <= n; ++i) {
                const std::string& v = toks[static_cast<size_t>(i)];
                if (v.size() != 1 || v[0] < '0' || v[0] > '3') qf_error(lineno, "q entries must be in 0..3");
                q.push_back(v[0] - '0');
            }
            have_q = true;
            continue;
        }
        qf_error(lineno, "expected a B row or the q row");
    }
    if (!have_header) throw std::invalid_argument("empty quadratic form file");
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("expected " + std::to_string(n) + " B rows");
    if (!have_q) throw std::invalid_argument("missing q row");
    return NamedQuadForm{name, QuadraticForm(std::move(b), std::move(q))};
}

std::string emit_quadform(const std::string& name, const QuadraticForm& f) {
    std::ostringstream out;
    out << "quadform " << name << " dim " << f.dimension() << "\n";
    for (int i = 0; i < f.dimension(); ++i) {
        out << "B";
        for (int j = 0; j < f.dimension(); ++j) out << " " << int(f.bilinear(i, j));
        out << "\n";
    }
    out << "q";
    for (int i = 0; i < f.dimension(); ++i) out << " " << f.q_basis(i);
    out << "\n";
    return out.str();
}

}  // namespace gx
