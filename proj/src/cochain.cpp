#include "gx/cochain.hpp"

#include <sstream>
#include <stdexcept>

namespace gx {

std::string ring_to_string(Ring r) {
    switch (r) {
        case Ring::Z: return "z";
        case Ring::Z2: return "z2";
        case Ring::Z4: return "z4";
        case Ring::QZ: return "qz";
    }
    throw std::logic_error("bad ring tag");
}

Ring parse_ring(const std::string& s) {
    if (s == "z") return Ring::Z;
    if (s == "z2") return Ring::Z2;
    if (s == "z4") return Ring::Z4;
    if (s == "qz") return Ring::QZ;
    throw std::invalid_argument("unknown coefficient ring: " + s);
}

Rat Cochain::normalize(const Rat& v) const {
    switch (ring_) {
        case Ring::Z:
            if (!is_integer(v)) throw std::invalid_argument("non-integer value in an integer cochain");
            return v;
        case Ring::Z2:
            if (!is_integer(v)) throw std::invalid_argument("non-integer value in a Z/2 cochain");
            return Rat(mod_floor(rat_num(v), 2));
        case Ring::Z4:
            if (!is_integer(v)) throw std::invalid_argument("non-integer value in a Z/4 cochain");
            return Rat(mod_floor(rat_num(v), 4));
        case Ring::QZ:
            return mod1(v);
    }
    throw std::logic_error("bad ring tag");
}

Rat Cochain::value(const Simplex& s) const {
    int idx = cx_->index_of(s);
    if (idx < 0) throw std::invalid_argument("not a simplex of the complex");
    if (static_cast<int>(s.size()) != degree_ + 1) throw std::invalid_argument("simplex degree mismatch");
    return value(idx);
}

void Cochain::set(int idx, const Rat& v) {
    if (idx < 0 || idx >= cx_->simplex_count(degree_)) throw std::invalid_argument("simplex index out of range");
    Rat n = normalize(v);
    if (n == 0)
        vals_.erase(idx);
    else
        vals_[idx] = n;
}

void Cochain::add(int idx, const Rat& v) { set(idx, value(idx) + v); }

Cochain Cochain::operator+(const Cochain& o) const {
    if (cx_ != o.cx_ || ring_ != o.ring_ || degree_ != o.degree_)
        throw std::invalid_argument("cochain addition: complex, ring, or degree mismatch");
    Cochain out = *this;
    for (const auto& [i, v] : o.vals_) out.add(i, v);
    return out;
}

Cochain Cochain::operator-(const Cochain& o) const { return *this + (-o); }

Cochain Cochain::operator-() const {
    Cochain out(cx_, ring_, degree_);
    for (const auto& [i, v] : vals_) out.set(i, -v);
    return out;
}

Cochain Cochain::scaled(const Int& k) const {
    Cochain out(cx_, ring_, degree_);
    for (const auto& [i, v] : vals_) out.set(i, v * Rat(k));
    return out;
}

bool Cochain::operator==(const Cochain& o) const {
    return cx_ == o.cx_ && ring_ == o.ring_ && degree_ == o.degree_ && vals_ == o.vals_;
}

std::vector<Rat> Cochain::dense() const {
    std::vector<Rat> out(cx_->simplex_count(degree_));
    for (const auto& [i, v] : vals_) out[i] = v;
    return out;
}

Cochain Cochain::from_dense(ComplexPtr cx, Ring ring, int degree, const std::vector<Rat>& v) {
    Cochain out(cx, ring, degree);
    if (static_cast<int>(v.size()) != cx->simplex_count(degree))
        throw std::invalid_argument("dense vector length mismatch");
    for (size_t i = 0; i < v.size(); ++i) out.set(static_cast<int>(i), v[i]);
    return out;
}

GF2Vec Cochain::gf2() const {
    if (ring_ != Ring::Z2) throw std::invalid_argument("gf2 view requires Z/2 coefficients");
    GF2Vec out(cx_->simplex_count(degree_), 0);
    for (const auto& [i, v] : vals_) out[i] = 1;
    return out;
}

Cochain Cochain::from_gf2(ComplexPtr cx, int degree, const GF2Vec& v) {
    Cochain out(cx, Ring::Z2, degree);
    if (static_cast<int>(v.size()) != cx->simplex_count(degree))
        throw std::invalid_argument("gf2 vector length mismatch");
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) out.set(static_cast<int>(i), Rat(1));
    return out;
}

Cochain d(const Cochain& c) {
    const auto& x = *c.complex();
    Cochain out(c.complex(), c.ring(), c.degree() + 1);
    const int k1 = c.degree() + 1;
    for (int r = 0; r < x.simplex_count(k1); ++r) {
        const Simplex& s = x.simplex(k1, r);
        Rat acc = 0;
        int sign = 1;
        for (size_t i = 0; i < s.size(); ++i) {
            Simplex f;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != i) f.push_back(s[j]);
            acc += Rat(sign) * c.value(x.index_of(f));
            sign = -sign;
        }
        out.set(r, acc);
    }
    return out;
}

namespace {

void require_product_ring(const Cochain& x, const Cochain& y) {
    if (x.complex() != y.complex()) throw std::invalid_argument("product of cochains on different complexes");
    if (x.ring() != y.ring()) throw std::invalid_argument("product of cochains over different rings");
    if (x.ring() == Ring::QZ) throw std::invalid_argument("Q/Z has no ring product");
}

Simplex subtuple(const Simplex& s, std::initializer_list<int> idx) {
    Simplex out;
    for (int i : idx) out.push_back(s[i]);
    return out;
}

}  // namespace

Cochain cup(const Cochain& x, const Cochain& y) {
    require_product_ring(x, y);
    const auto& cx = *x.complex();
    const int m = x.degree(), n = y.degree();
    Cochain out(x.complex(), x.ring(), m + n);
    for (int r = 0; r < cx.simplex_count(m + n); ++r) {
        const Simplex& s = cx.simplex(m + n, r);
        Simplex front(s.begin(), s.begin() + m + 1);
        Simplex back(s.begin() + m, s.end());
        Rat v = x.value(cx.index_of(front)) * y.value(cx.index_of(back));
        out.set(r, v);
    }
    return out;
}

Cochain cup1(const Cochain& x, const Cochain& y) {
    require_product_ring(x, y);
    const auto& cx = *x.complex();
    const int m = x.degree(), n = y.degree();
    auto val = [&](const Cochain& c, const Simplex& s) { return c.value(cx.index_of(s)); };

    if (m == 1 && n == 1) {
        Cochain out(x.complex(), x.ring(), 1);
        for (int r = 0; r < cx.simplex_count(1); ++r) {
            const Simplex& s = cx.simplex(1, r);
            out.set(r, -val(x, s) * val(y, s));
        }
        return out;
    }
    if (m == 1 && n == 2) {
        Cochain out(x.complex(), x.ring(), 2);
        for (int r = 0; r < cx.simplex_count(2); ++r) {
            const Simplex& s = cx.simplex(2, r);
            out.set(r, -val(x, subtuple(s, {0, 2})) * val(y, s));
        }
        return out;
    }
    if (m == 2 && n == 1) {
        Cochain out(x.complex(), x.ring(), 2);
        for (int r = 0; r < cx.simplex_count(2); ++r) {
            const Simplex& s = cx.simplex(2, r);
            out.set(r, val(x, s) * (val(y, subtuple(s, {0, 1})) + val(y, subtuple(s, {1, 2}))));
        }
        return out;
    }
    if (m == 2 && n == 2) {
        Cochain out(x.complex(), x.ring(), 3);
        for (int r = 0; r < cx.simplex_count(3); ++r) {
            const Simplex& s = cx.simplex(3, r);
            Rat v = val(x, subtuple(s, {0, 1, 3})) * val(y, subtuple(s, {1, 2, 3})) -
                    val(x, subtuple(s, {0, 2, 3})) * val(y, subtuple(s, {0, 1, 2}));
            out.set(r, v);
        }
        return out;
    }
    throw std::invalid_argument("cup1 is defined only in bidegrees (1,1), (1,2), (2,1), (2,2)");
}

Cochain cup2(const Cochain& x, const Cochain& y) {
    require_product_ring(x, y);
    if (x.degree() != 2 || y.degree() != 2)
        throw std::invalid_argument("cup2 is defined only in bidegree (2,2)");
    const auto& cx = *x.complex();
    Cochain out(x.complex(), x.ring(), 2);
    for (int r = 0; r < cx.simplex_count(2); ++r) out.set(r, -x.value(r) * y.value(r));
    return out;
}

Cochain special_lift(const Cochain& x) {
    if (x.ring() != Ring::Z2) throw std::invalid_argument("special lift takes a Z/2 cochain");
    Cochain out(x.complex(), Ring::Z, x.degree());
    for (const auto& [i, v] : x.values()) out.set(i, v);
    return out;
}

Cochain pontrjagin_square_sq(const Cochain& a) {
    if (a.ring() != Ring::Z2 || a.degree() != 1)
        throw std::invalid_argument("pontrjagin_square_sq takes a Z/2 1-cochain");
    if (!d(a).is_zero()) throw std::invalid_argument("pontrjagin_square_sq requires a cocycle");
    Cochain A = special_lift(a);
    Cochain a4 = cup(cup(cup(A, A), A), A);
    return map_coefficients(CoefficientMorphism::mod4(), a4);
}

Cochain map_coefficients(const CoefficientMorphism& m, const Cochain& c) {
    using K = CoefficientMorphism::Kind;
    Ring from, to;
    switch (m.kind) {
        case K::Mod2: from = Ring::Z; to = Ring::Z2; break;
        case K::Mod4: from = Ring::Z; to = Ring::Z4; break;
        case K::Double: from = Ring::Z2; to = Ring::Z4; break;
        case K::Half: from = Ring::Z2; to = Ring::QZ; break;
        case K::Quarter4: from = Ring::Z4; to = Ring::QZ; break;
        case K::Nth: from = Ring::Z; to = Ring::QZ; break;
    }
    if (c.ring() != from) throw std::invalid_argument("coefficient morphism does not apply to this ring");
    if (m.kind == K::Nth && m.n <= 0) throw std::invalid_argument("nth morphism needs n >= 1");
    Cochain out(c.complex(), to, c.degree());
    for (const auto& [i, v] : c.values()) {
        switch (m.kind) {
            case K::Mod2:
            case K::Mod4: out.set(i, v); break;
            case K::Double: out.set(i, v * 2); break;
            case K::Half: out.set(i, v / 2); break;
            case K::Quarter4: out.set(i, v / 4); break;
            case K::Nth: out.set(i, v / Rat(m.n)); break;
        }
    }
    return out;
}

Cochain half(const Cochain& c) { return map_coefficients(CoefficientMorphism::half(), c); }
Cochain quarter4(const Cochain& c) { return map_coefficients(CoefficientMorphism::quarter4(), c); }
Cochain nth(const Cochain& c, const Int& n) { return map_coefficients(CoefficientMorphism::nth(n), c); }
Cochain mod2(const Cochain& c) { return map_coefficients(CoefficientMorphism::mod2(), c); }

Cochain pullback_cochain(const SimplicialMap& f, const Cochain& c) {
    const auto& src = *f.source();
    Cochain out(f.source(), c.ring(), c.degree());
    const int k = c.degree();
    for (int r = 0; r < src.simplex_count(k); ++r) {
        const Simplex& s = src.simplex(k, r);
        if (!f.nondegenerate_on(s)) continue;
        out.set(r, c.value(c.complex()->index_of(f.image_tuple(s))));
    }
    return out;
}

Rat integrate(const Cochain& c, const SignedChain& m) {
    if (c.complex() != m.complex()) throw std::invalid_argument("integrate: complex mismatch");
    if (c.degree() != m.degree()) throw std::invalid_argument("integrate: degree mismatch");
    Rat acc = 0;
    for (const auto& [i, coeff] : m.terms()) acc += Rat(coeff) * c.value(i);
    switch (c.ring()) {
        case Ring::Z: return acc;
        case Ring::Z2: return Rat(mod_floor(rat_num(acc), 2));
        case Ring::Z4: return Rat(mod_floor(rat_num(acc), 4));
        case Ring::QZ: return mod1(acc);
    }
    throw std::logic_error("bad ring tag");
}

namespace {

[[noreturn]] void coc_error(int line, const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

NamedCochain parse_cochain(const std::string& text, const ComplexPtr& cx) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string name;
    int deg = -1;
    Ring ring = Ring::Z;
    Cochain c(cx, Ring::Z, 0);

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
            if (toks.size() != 6 || toks[0] != "cochain" || toks[2] != "deg" || toks[4] != "coeff")
                coc_error(lineno, "expected 'cochain <name> deg <k> coeff <ring>'");
            name = toks[1];
            try {
                deg = std::stoi(toks[3]);
            } catch (const std::exception&) {
                coc_error(lineno, "malformed degree in cochain header");
            }
            try {
                ring = parse_ring(toks[5]);
            } catch (const std::invalid_argument& e) {
                coc_error(lineno, e.what());
            }
            if (deg < 0) coc_error(lineno, "negative degree");
            c = Cochain(cx, ring, deg);
            have_header = true;
            continue;
        }

        if (toks.size() != 3 || toks[1] != "=") coc_error(lineno, "expected '<v,v,...> = <value>'");
        Simplex s;
        std::string cur;
        for (char ch : toks[0] + ",") {
            if (ch == ',') {
                int v = cx->vertex_index(cur);
                if (v < 0) coc_error(lineno, "unknown vertex " + cur);
                s.push_back(v);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] <= s[i - 1]) coc_error(lineno, "non-increasing tuple");
        if (static_cast<int>(s.size()) != deg + 1) coc_error(lineno, "tuple length does not match the degree");
        int idx = cx->index_of(s);
        if (idx < 0) coc_error(lineno, "not a simplex of the complex");
        try {
            c.set(idx, parse_rational(toks[2]));
        } catch (const std::invalid_argument& e) {
            coc_error(lineno, e.what());
        }
    }
    if (!have_header) throw std::invalid_argument("missing cochain header");
    return {name, c};
}

std::string emit_cochain(const std::string& name, const Cochain& c) {
    std::ostringstream out;
    out << "cochain " << name << " deg " << c.degree() << " coeff " << ring_to_string(c.ring()) << "\n";
    for (const auto& [i, v] : c.values()) {
        const Simplex& s = c.complex()->simplex(c.degree(), i);
        for (size_t j = 0; j < s.size(); ++j) {
            if (j) out << ",";
            out << c.complex()->vertex_name(s[j]);
        }
        out << " = " << rat_to_string(v) << "\n";
    }
    return out.str();
}

}  // namespace gx
