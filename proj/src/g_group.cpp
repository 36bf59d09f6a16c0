#include "gx/g_group.hpp"

#include "gx/limits.hpp"
#include "gx/random.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gx {

namespace {

void require_cochain(const Cochain& c, Ring ring, int degree, const char* what) {
    if (c.ring() != ring || c.degree() != degree)
        throw std::invalid_argument(std::string(what) + ": wrong ring or degree");
}

void require_cocycle(const Cochain& c, const char* what) {
    if (!d(c).is_zero()) throw std::invalid_argument(std::string(what) + ": not a cocycle");
}

GF2Mat gf2_of(const IntMat& m) {
    GF2Mat out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (mod_floor(m.at(r, c), 2) != 0) out.set(r, c, true);
    return out;
}

}  // namespace

Triple::Triple(Cochain w_, Cochain p_, Cochain a_) : w(std::move(w_)), p(std::move(p_)), a(std::move(a_)) {
    if (w.complex() != p.complex() || w.complex() != a.complex())
        throw std::invalid_argument("triple components live on different complexes");
    require_cochain(w, Ring::QZ, 3, "triple w");
    require_cochain(p, Ring::Z2, 2, "triple p");
    require_cochain(a, Ring::Z2, 1, "triple a");
    require_cocycle(p, "triple p");
    require_cocycle(a, "triple a");
}

Triple Triple::zero(const ComplexPtr& x) {
    return Triple(Cochain(x, Ring::QZ, 3), Cochain(x, Ring::Z2, 2), Cochain(x, Ring::Z2, 1));
}

Cochain big_d(const Triple& g) { return d(g.w) + half(cup(g.p, g.p)); }

Triple big_d_prime(const Cochain& t, const Cochain& x) {
    require_cochain(t, Ring::Z2, 1, "co-differential t");
    require_cochain(x, Ring::Z2, 0, "co-differential x");
    if (t.complex() != x.complex()) throw std::invalid_argument("co-differential: complex mismatch");
    Cochain dt = d(t);
    return Triple(half(cup(t, dt)), dt, d(x));
}

Triple product(const Triple& g1, const Triple& g2) {
    if (g1.complex() != g2.complex()) throw std::invalid_argument("product: complex mismatch");
    const Cochain &w = g1.w, &p = g1.p, &a = g1.a;
    const Cochain &v = g2.w, &q = g2.p, &b = g2.a;

    Cochain ab = cup(a, b);
    Cochain cross = cup1(p, q) + cup1(p + q, ab) + cup(cup(a, cup1(a, b)), b);
    Cochain bigA = special_lift(a), bigB = special_lift(b);
    Cochain abb = cup(bigA, cup(bigB, bigB));
    Cochain u = w + v + half(cross) + nth(abb, 4);
    return Triple(u, p + q + ab, a + b);
}

Triple inverse(const Triple& g) {
    Cochain a2 = cup(g.a, g.a);
    Cochain bigA = special_lift(g.a);
    Cochain cube = cup(bigA, cup(bigA, bigA));
    Cochain w = -g.w + half(cup1(g.p, a2)) + nth(cube, 4);
    return Triple(w, g.p + a2, g.a);
}

Triple power(const Triple& g, const Int& n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    Triple acc = Triple::zero(g.complex());
    for (Int i = 0; i < n; ++i) acc = product(acc, g);
    return acc;
}

Triple commutator(const Triple& g1, const Triple& g2) {
    return product(product(product(g1, g2), inverse(g1)), inverse(g2));
}

Triple chi(const Cochain& b, const Triple& g) {
    require_cochain(b, Ring::Z2, 1, "twist class");
    require_cocycle(b, "twist class");
    if (b.complex() != g.complex()) throw std::invalid_argument("twist: complex mismatch");
    Cochain bigA = special_lift(g.a), bigB = special_lift(b);
    Cochain abb = cup(bigA, cup(bigB, bigB));
    Cochain w = half(cup(g.p, b) + cup(cup(g.a, cup1(g.a, b)), b)) - nth(abb, 4);
    Triple correction(w, cup(g.a, b), Cochain(g.complex(), Ring::Z2, 1));
    return product(g, correction);
}

Triple kapustin_form(const Triple& g) {
    Cochain bigA = special_lift(g.a);
    Cochain cube = cup(bigA, cup(bigA, bigA));
    return Triple(g.w - nth(cube, 8), g.p, g.a);
}

Cochain kapustin_residual(const Triple& g) {
    Triple k = kapustin_form(g);
    return d(k.w) + half(cup(k.p, k.p)) + quarter4(pontrjagin_square_sq(g.a));
}

Triple extension_cocycle(const Cochain& a, const Cochain& b) {
    require_cochain(a, Ring::Z2, 1, "extension argument");
    require_cochain(b, Ring::Z2, 1, "extension argument");
    require_cocycle(a, "extension argument");
    require_cocycle(b, "extension argument");
    if (a.complex() != b.complex()) throw std::invalid_argument("extension: complex mismatch");
    Cochain bigA = special_lift(a), bigB = special_lift(b);
    Cochain abb = cup(bigA, cup(bigB, bigB));
    Cochain w = half(cup(cup(a, cup1(a, b)), b)) + nth(abb, 4);
    return Triple(w, cup(a, b), Cochain(a.complex(), Ring::Z2, 1));
}

Triple pullback_triple(const SimplicialMap& f, const Triple& g) {
    if (f.target() != g.complex()) throw std::invalid_argument("pullback: triple is not on the target complex");
    return Triple(pullback_cochain(f, g.w), pullback_cochain(f, g.p), pullback_cochain(f, g.a));
}

Rat evaluate_g1(const Triple& g, const SignedChain& m, const Cochain& t, const Rat& spin_term,
                std::optional<Rat> arf_term) {
    if (!g.a.is_zero() && !arf_term.has_value())
        throw std::invalid_argument("evaluation: nonzero a requires an explicit arf correction");
    if (spin_term != 0 && spin_term != Rat(1, 2))
        throw std::invalid_argument("evaluation: the spin term must be 0 or 1/2");
    require_cochain(t, Ring::Z2, 1, "evaluation t");
    if (t.complex() != g.complex()) throw std::invalid_argument("evaluation: complex mismatch");
    if (m.complex() != g.complex() || m.degree() != 3)
        throw std::invalid_argument("evaluation: the cycle must be a degree-three chain of the same complex");
    if (!m.boundary().is_zero()) throw std::invalid_argument("evaluation: the chain is not a cycle");
    if (!big_d(g).is_zero()) throw std::invalid_argument("evaluation: the triple is not a cocycle");
    Cochain dt = d(t);
    Cochain integrand = g.w + half(cup1(g.p, dt) + cup(t, dt));
    return mod1(arf_term.value_or(Rat(0)) + spin_term + integrate(integrand, m));
}

std::string filtration_level_to_string(FiltrationLevel level) {
    switch (level) {
        case FiltrationLevel::TopGrade: return "G/G1";
        case FiltrationLevel::MiddleGrade: return "G1/G2";
        case FiltrationLevel::BottomGrade: return "G2";
        case FiltrationLevel::Identity: return "identity";
    }
    throw std::logic_error("bad filtration level");
}

GroupContext::GroupContext(ComplexPtr x) : x_(std::move(x)) {
    if (!x_) throw std::invalid_argument("null complex");
}

const SNFDecomposition& GroupContext::snf_d(int k) {
    auto it = snf_.find(k);
    if (it == snf_.end()) it = snf_.emplace(k, smith_normal_form(coboundary_matrix(*x_, k))).first;
    return it->second;
}

const GF2Mat& GroupContext::gf2_d(int k) {
    auto it = gf2_.find(k);
    if (it == gf2_.end()) it = gf2_.emplace(k, gf2_of(coboundary_matrix(*x_, k))).first;
    return it->second;
}

GF2Cohomology& GroupContext::h(int k) {
    auto it = h_.find(k);
    if (it == h_.end()) it = h_.emplace(k, GF2Cohomology(x_, k)).first;
    return it->second;
}

const HomologyBasis& GroupContext::hb(int k) {
    auto it = hb_.find(k);
    if (it == hb_.end()) it = hb_.emplace(k, homology_basis(x_, k)).first;
    return it->second;
}

const std::vector<Cochain>& GroupContext::z2_cocycle_basis(int k) {
    auto it = z2_basis_.find(k);
    if (it == z2_basis_.end()) {
        const GF2Mat& a = gf2_d(k);
        auto kernel = solve_gf2(a, GF2Vec(a.rows(), 0)).kernel;
        std::vector<Cochain> basis;
        for (const auto& z : kernel) basis.push_back(Cochain::from_gf2(x_, k, z));
        it = z2_basis_.emplace(k, std::move(basis)).first;
    }
    return it->second;
}

void GroupContext::require_same_complex(const Triple& g) const {
    if (g.complex() != x_) throw std::invalid_argument("triple is not on this context's complex");
}

bool GroupContext::cbar_equal(const Triple& g1, const Triple& g2) {
    require_same_complex(g1);
    require_same_complex(g2);
    if (!(g1.p == g2.p) || !(g1.a == g2.a)) return false;
    Cochain diff = g1.w - g2.w;
    if (diff.is_zero()) return true;
    return image_membership_qz(snf_d(2), diff.dense()).has_value();
}

bool GroupContext::is_identity(const Triple& g) {
    require_same_complex(g);
    if (!big_d(g).is_zero()) throw std::invalid_argument("identity test requires a cocycle triple");

    // step one: kill the degree-one part
    auto solx = solve_gf2(gf2_d(0), g.a.gf2());
    if (!solx.solvable) return false;
    Triple g1 = product(g, big_d_prime(Cochain(x_, Ring::Z2, 1), Cochain::from_gf2(x_, 0, solx.x)));
    if (!g1.a.is_zero()) throw std::logic_error("degree-one part survived its own cancellation");

    // step two: kill the degree-two part
    auto solt = solve_gf2(gf2_d(1), g1.p.gf2());
    if (!solt.solvable) return false;
    Cochain t0 = Cochain::from_gf2(x_, 1, solt.x);
    Cochain dt0 = d(t0);

    // step three: lattice membership of the residual over all solutions t0 + z
    Cochain residual = g1.w - half(cup(t0, dt0) + cup1(g1.p, dt0));
    std::vector<std::vector<Rat>> gens;
    for (const auto& z : z2_cocycle_basis(1)) gens.push_back(half(cup(z, g1.p)).dense());
    return affine_coboundary_membership(snf_d(2), residual.dense(), gens);
}

bool GroupContext::g_equal(const Triple& g1, const Triple& g2) {
    require_same_complex(g1);
    require_same_complex(g2);
    if (!big_d(g1).is_zero() || !big_d(g2).is_zero())
        throw std::invalid_argument("group equality requires cocycle triples");
    return is_identity(product(g1, inverse(g2)));
}

std::optional<Int> GroupContext::order(const Triple& g, const Int& bound) {
    if (bound < 1) throw std::invalid_argument("order: bound must be at least one");
    if (!big_d(g).is_zero()) throw std::invalid_argument("order: the triple is not a cocycle");
    Triple h = g;
    for (Int n = 1; n <= bound; ++n) {
        if (is_identity(h)) return n;
        h = product(h, g);
    }
    return std::nullopt;
}

FiltrationClass GroupContext::filtration_class(const Triple& g) {
    require_same_complex(g);
    if (!big_d(g).is_zero()) throw std::invalid_argument("filtration class requires a cocycle triple");

    FiltrationClass out;
    GF2Vec ca = h(1).coordinates(g.a);
    if (std::any_of(ca.begin(), ca.end(), [](uint8_t b) { return b != 0; })) {
        out.level = FiltrationLevel::TopGrade;
        for (uint8_t b : ca) out.coordinates.push_back(Rat(int(b)));
        return out;
    }

    auto solx = solve_gf2(gf2_d(0), g.a.gf2());
    if (!solx.solvable) throw std::logic_error("trivial class with no primitive");
    Triple g1 = product(g, big_d_prime(Cochain(x_, Ring::Z2, 1), Cochain::from_gf2(x_, 0, solx.x)));

    GF2Vec cp = h(2).coordinates(g1.p);
    if (std::any_of(cp.begin(), cp.end(), [](uint8_t b) { return b != 0; })) {
        // express the class in the SH^2 basis
        const auto& sh2 = sh2_basis();
        GF2Mat m(h(2).dimension(), static_cast<int>(sh2.size()));
        for (size_t j = 0; j < sh2.size(); ++j) {
            GF2Vec col = h(2).coordinates(sh2[j]);
            for (size_t i = 0; i < col.size(); ++i)
                if (col[i]) m.set(static_cast<int>(i), static_cast<int>(j), true);
        }
        auto sol = solve_gf2(m, cp);
        if (!sol.solvable) throw std::logic_error("cocycle triple whose p-class escapes the special subgroup");
        out.level = FiltrationLevel::MiddleGrade;
        for (uint8_t b : sol.x) out.coordinates.push_back(Rat(int(b)));
        return out;
    }

    auto solt = solve_gf2(gf2_d(1), g1.p.gf2());
    if (!solt.solvable) throw std::logic_error("trivial class with no primitive");
    Cochain t0 = Cochain::from_gf2(x_, 1, solt.x);
    Cochain dt0 = d(t0);
    Cochain residual = g1.w - half(cup(t0, dt0) + cup1(g1.p, dt0));

    std::vector<Rat> pairings;
    bool all_zero = true;
    for (const auto& chain : hb(3).chains) {
        Rat v = pair_qz(residual, chain);
        if (v != 0) all_zero = false;
        pairings.push_back(v);
    }
    if (all_zero) {
        out.level = FiltrationLevel::Identity;
        return out;
    }
    out.level = FiltrationLevel::BottomGrade;
    out.coordinates = std::move(pairings);
    return out;
}

const std::vector<Cochain>& GroupContext::sh2_basis() {
    if (sh2_) return *sh2_;
    auto& h2 = h(2);
    const int dim = h2.dimension();
    const auto& basis4 = hb(4);
    GF2Mat m(static_cast<int>(basis4.chains.size()), dim);
    for (int j = 0; j < dim; ++j) {
        Cochain sq = half(cup(h2.basis_cochain(j), h2.basis_cochain(j)));
        for (size_t i = 0; i < basis4.chains.size(); ++i) {
            Rat v = pair_qz(sq, basis4.chains[i]);
            if (v == Rat(1, 2))
                m.set(static_cast<int>(i), j, true);
            else if (v != 0)
                throw std::logic_error("square pairing escaped the two-torsion of the circle");
        }
    }
    auto kernel = solve_gf2(m, GF2Vec(m.rows(), 0)).kernel;
    std::vector<Cochain> basis;
    for (const auto& combo : kernel) {
        Cochain c(x_, Ring::Z2, 2);
        for (int j = 0; j < dim; ++j)
            if (combo[static_cast<size_t>(j)]) c = c + h2.basis_cochain(j);
        basis.push_back(std::move(c));
    }
    sh2_ = std::move(basis);
    return *sh2_;
}

Triple GroupContext::lift_to_G1(const Cochain& p) {
    require_cochain(p, Ring::Z2, 2, "lift argument");
    require_cocycle(p, "lift argument");
    if (p.complex() != x_) throw std::invalid_argument("lift: complex mismatch");
    Cochain target = -half(cup(p, p));
    auto w = image_membership_qz(snf_d(3), target.dense());
    if (!w) throw std::invalid_argument("lift: the square of the class does not bound");
    return Triple(Cochain::from_dense(x_, Ring::QZ, 3, *w), p, Cochain(x_, Ring::Z2, 1));
}

GStructureReport GroupContext::structure_report() {
    GStructureReport r;
    r.h1_dim = h(1).dimension();
    r.sh2 = sh2_basis();
    r.h3 = cohomology(x_, Ring::QZ, 3);

    const auto& basis3 = hb(3);
    std::vector<size_t> even_rows;
    for (size_t i = 0; i < r.h3.torsion.size(); ++i)
        if (r.h3.torsion[i] % 2 == 0) even_rows.push_back(i);

    r.alpha = GF2Mat(static_cast<int>(even_rows.size()), static_cast<int>(r.sh2.size()));
    for (size_t j = 0; j < r.sh2.size(); ++j) {
        Triple sq = product(lift_to_G1(r.sh2[j]), lift_to_G1(r.sh2[j]));
        if (!sq.p.is_zero() || !sq.a.is_zero()) throw std::logic_error("squared lift left the bottom level");
        for (size_t row = 0; row < even_rows.size(); ++row) {
            const size_t i = even_rows[row];
            Rat paired = pair_qz(sq.w, basis3.chains[i]) * Rat(basis3.orders[i]);
            if (!is_integer(paired)) throw std::logic_error("pairing with a torsion generator is not torsion");
            if (mod_floor(rat_num(paired), 2) != 0) r.alpha.set(static_cast<int>(row), static_cast<int>(j), true);
        }
    }

    const int n1 = r.h1_dim;
    r.z_table.assign(static_cast<size_t>(n1), {});
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j)
            r.z_table[static_cast<size_t>(i)].push_back(
                filtration_class(extension_cocycle(h(1).basis_cochain(i), h(1).basis_cochain(j))));
    return r;
}

bool GroupContext::lifts_to_order2(const Cochain& a) {
    require_cochain(a, Ring::Z2, 1, "order criterion argument");
    require_cocycle(a, "order criterion argument");
    if (a.complex() != x_) throw std::invalid_argument("order criterion: complex mismatch");
    return h(2).is_coboundary(cup(a, a));
}

bool GroupContext::lifts_to_order4(const Cochain& a) {
    require_cochain(a, Ring::Z2, 1, "order criterion argument");
    require_cocycle(a, "order criterion argument");
    if (a.complex() != x_) throw std::invalid_argument("order criterion: complex mismatch");
    if (h(2).is_coboundary(cup(a, a)))
        throw std::invalid_argument("order criterion: the square class vanishes; use the order-two test");

    const auto& sh2 = sh2_basis();
    const int cap = dim_cap(16);
    if (static_cast<int>(sh2.size()) > cap)
        throw std::runtime_error("order criterion: special subgroup dimension " + std::to_string(sh2.size()) +
                                 " exceeds the exhaustive cap " + std::to_string(cap) +
                                 "; raise GX_MAX_DIM to allow the search");

    std::vector<Int> a4;
    for (const Rat& v : pontrjagin_square_sq(a).dense()) a4.push_back(rat_num(v));

    const uint64_t total = uint64_t{1} << sh2.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        Cochain p(x_, Ring::Z2, 2);
        for (size_t j = 0; j < sh2.size(); ++j)
            if (mask & (uint64_t{1} << j)) p = p + sh2[j];
        Cochain bigP = special_lift(p);
        std::vector<Rat> pp = cup(bigP, bigP).dense();
        std::vector<Int> diff(a4.size());
        for (size_t i = 0; i < a4.size(); ++i) diff[i] = mod_floor(a4[i] - 2 * rat_num(pp[i]), 4);
        if (solve_mod_n(snf_d(3), diff, 4).has_value()) return true;
    }
    return false;
}

bool GroupContext::validate_spin_quadratic(const SignedChain& m, const std::vector<Rat>& q_values) {
    if (m.complex() != x_ || m.degree() != 3)
        throw std::invalid_argument("spin validation: the cycle must be a degree-three chain of this complex");
    if (!m.boundary().is_zero()) throw std::invalid_argument("spin validation: the chain is not a cycle");
    const auto& basis = z2_cocycle_basis(2);
    if (q_values.size() != basis.size())
        throw std::invalid_argument("spin validation: value count does not match the cocycle basis");
    const size_t k = basis.size();

    // (1/2) integral of basis_i cup1 basis_j over the cycle
    std::vector<std::vector<Rat>> pair_half(k, std::vector<Rat>(k, 0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) pair_half[i][j] = mod1(integrate(cup1(basis[i], basis[j]), m) / 2);

    auto q_ext = [&](const GF2Vec& combo) {
        Rat acc = 0;
        for (size_t i = 0; i < k; ++i) {
            if (!combo[i]) continue;
            acc += q_values[i];
            for (size_t j = i + 1; j < k; ++j)
                if (combo[j]) acc += pair_half[i][j];
        }
        return mod1(acc);
    };

    // columns are the cocycle basis, to express arbitrary cocycles in it
    GF2Mat bmat(x_->simplex_count(2), static_cast<int>(k));
    for (size_t j = 0; j < k; ++j) {
        GF2Vec col = basis[j].gf2();
        for (size_t i = 0; i < col.size(); ++i)
            if (col[i]) bmat.set(static_cast<int>(i), static_cast<int>(j), true);
    }

    // condition on coboundaries, checked on the edge basis
    for (int e = 0; e < x_->simplex_count(1); ++e) {
        Cochain t(x_, Ring::Z2, 1);
        t.set(e, 1);
        Cochain dt = d(t);
        auto sol = solve_gf2(bmat, dt.gf2());
        if (!sol.solvable) throw std::logic_error("a coboundary escaped the cocycle basis");
        Rat expected = mod1(integrate(cup(t, dt), m) / 2);
        if (q_ext(sol.x) != expected) return false;
    }

    // polarization on randomized pairs
    Rng rng(1789);
    for (int trial = 0; trial < 40; ++trial) {
        GF2Vec c1(k, 0), c2(k, 0), sum(k, 0);
        Cochain p1(x_, Ring::Z2, 2), p2(x_, Ring::Z2, 2);
        for (size_t i = 0; i < k; ++i) {
            c1[i] = rng.flip() ? 1 : 0;
            c2[i] = rng.flip() ? 1 : 0;
            sum[i] = c1[i] ^ c2[i];
            if (c1[i]) p1 = p1 + basis[i];
            if (c2[i]) p2 = p2 + basis[i];
        }
        Rat cross = mod1(integrate(cup1(p1, p2), m) / 2);
        if (q_ext(sum) != mod1(q_ext(c1) + q_ext(c2) + cross)) return false;
    }
    return true;
}

NamedTriple parse_triple(const std::string& text, const ComplexPtr& cx) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::string name;
    std::vector<std::string> sections;

    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line;
        auto hash = stripped.find('#');
        if (hash != std::string::npos) stripped.erase(hash);
        std::istringstream ls(stripped);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "triple")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'triple <name>'");
            name = toks[1];
            have_header = true;
            continue;
        }
        if (toks[0] == "cochain") {
            sections.emplace_back();
            sections.back() = line + "\n";
            continue;
        }
        if (sections.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected a cochain section");
        sections.back() += line + "\n";
    }
    if (!have_header) throw std::invalid_argument("empty triple file");
    if (sections.size() != 3)
        throw std::invalid_argument("expected exactly three cochain sections, found " + std::to_string(sections.size()));

    const char* expected_names[3] = {"w", "p", "a"};
    const Ring expected_rings[3] = {Ring::QZ, Ring::Z2, Ring::Z2};
    const int expected_degrees[3] = {3, 2, 1};
    std::vector<Cochain> parts;
    for (int i = 0; i < 3; ++i) {
        NamedCochain nc = [&] {
            try {
                return parse_cochain(sections[static_cast<size_t>(i)], cx);
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument("in the " + std::string(expected_names[i]) + " section: " + e.what());
            }
        }();
        if (nc.name != expected_names[i])
            throw std::invalid_argument("cochain sections must be named w, p, a in order");
        if (nc.c.ring() != expected_rings[i] || nc.c.degree() != expected_degrees[i])
            throw std::invalid_argument("section " + nc.name + " has the wrong ring or degree");
        parts.push_back(nc.c);
    }
    return NamedTriple{name, Triple(parts[0], parts[1], parts[2])};
}

std::string emit_triple(const std::string& name, const Triple& g) {
    std::ostringstream out;
    out << "triple " << name << "\n";
    out << emit_cochain("w", g.w);
    out << emit_cochain("p", g.p);
    out << emit_cochain("a", g.a);
    return out.str();
}

}  // namespace gx
