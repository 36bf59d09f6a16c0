#include "gx/builtin.hpp"

#include "gx/g_group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gx {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("builtin example is inconsistent: " + what);
}

int posmod(int v, int m) { return ((v % m) + m) % m; }

// ---------------------------------------------------------------- spheres

NamedExample make_simplex_boundary(int n) {
    std::vector<std::string> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= n; ++skip) {
        Simplex f;
        for (int i = 0; i <= n; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(f);
    }
    auto x = OrderedComplex::build("sphere" + std::to_string(n - 1), verts, facets);
    SignedChain m(x, n - 1);
    for (int skip = 0; skip <= n; ++skip) m.add(x->index_of(facets[skip]), skip % 2 == 0 ? 1 : -1);
    require(m.boundary().is_zero(), "sphere orientation cycle fails to close");
    NamedExample ex;
    ex.complex = x;
    ex.fundamental = m;
    return ex;
}

// ------------------------------------------------- the circle bundle tss2

// Vertices carry two-digit labels; the listing order is the label order.
std::string tss_label(int a, int b) { return std::string{char('0' + a), char('0' + b)}; }

// Torus vertex on the 8x4 grid, in bundle coordinates (x, y).
std::string tss_torus(int x, int y) {
    x = posmod(x, 8);
    y = posmod(y, 4);
    return tss_label((x + y) % 4, 2 * y + (x >= 4 ? 1 : 0));
}

// Cone points of the two solid sides, four levels each.
std::string tss_north(int y) {
    y = posmod(y, 4);
    return tss_label(4 + y % 2, 2 * y);
}
std::string tss_south(int y) {
    y = posmod(y, 4);
    return tss_label(6 + y % 2, 2 * y);
}

struct TssData {
    ComplexPtr x;
    std::vector<int> kind;     // 0 torus, 1 north, 2 south
    std::vector<int> glevel;   // bundle level y
    std::vector<int> f1level;  // base-side level; -1 on the north side
    std::vector<int> gridx;    // grid column of a torus vertex; -1 on the cones
};

TssData tss_build() {
    // label -> {kind, x, y}
    std::map<std::string, std::array<int, 3>> vinfo;
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 4; ++y)
            require(vinfo.emplace(tss_torus(x, y), std::array<int, 3>{0, x, y}).second, "torus labels collide");
    for (int y = 0; y < 4; ++y)
        require(vinfo.emplace(tss_north(y), std::array<int, 3>{1, -1, y}).second, "north labels collide");
    for (int y = 0; y < 4; ++y)
        require(vinfo.emplace(tss_south(y), std::array<int, 3>{2, -1, y}).second, "south labels collide");
    require(vinfo.size() == 40, "vertex census");

    std::vector<std::string> verts;
    std::map<std::string, int> vidx;
    for (const auto& [lab, info] : vinfo) {
        vidx[lab] = static_cast<int>(verts.size());
        verts.push_back(lab);
    }

    // Base-side coordinates (a, b) name the torus vertex at (a, a + b): the
    // two charts of the glued torus differ by this shear.
    auto f1 = [&](int a, int b) { return tss_torus(a, a + b); };

    std::vector<std::array<std::string, 4>> tets;
    auto add_tet = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        tets.push_back({a, b, c, d});
    };

    // The boundary torus is a checkerboard of 8x4 cells in base coordinates;
    // each triangle is coned to the unique odd level it meets on either side.
    for (int cx = 0; cx < 8; ++cx)
        for (int cy = 0; cy < 4; ++cy) {
            std::string v00 = f1(cx, cy), v10 = f1(cx + 1, cy);
            std::string v01 = f1(cx, cy + 1), v11 = f1(cx + 1, cy + 1);
            std::vector<std::array<std::string, 3>> tris;
            if ((cx + cy) % 2 == 0) {
                tris.push_back({v00, v10, v11});
                tris.push_back({v00, v01, v11});
            } else {
                tris.push_back({v00, v10, v01});
                tris.push_back({v10, v01, v11});
            }
            int base_odd = cy % 2 == 1 ? posmod(cy, 4) : posmod(cy + 1, 4);
            for (const auto& tri : tris) {
                std::set<int> bundle_odd;
                for (const auto& lab : tri) {
                    int y = vinfo.at(lab)[2];
                    if (y % 2 == 1) bundle_odd.insert(y);
                }
                require(bundle_odd.size() == 1, "cone level of a torus triangle is not unique");
                add_tet(tri[0], tri[1], tri[2], tss_north(*bundle_odd.begin()));
                add_tet(tri[0], tri[1], tri[2], tss_south(base_odd));
            }
        }

    // Each side is filled by two coned level disks joined to both odd levels.
    for (int l : {0, 2})
        for (int x = 0; x < 8; ++x) {
            add_tet(tss_torus(x, l), tss_torus(x + 1, l), tss_north(l), tss_north(1));
            add_tet(tss_torus(x, l), tss_torus(x + 1, l), tss_north(l), tss_north(3));
            add_tet(f1(x, l), f1(x + 1, l), tss_south(l), tss_south(1));
            add_tet(f1(x, l), f1(x + 1, l), tss_south(l), tss_south(3));
        }
    require(tets.size() == 192, "cell census");

    std::set<Simplex> seen;
    std::vector<Simplex> top;
    for (const auto& t : tets) {
        Simplex s;
        for (const auto& lab : t) s.push_back(vidx.at(lab));
        std::sort(s.begin(), s.end());
        require(std::adjacent_find(s.begin(), s.end()) == s.end(), "degenerate cell");
        require(seen.insert(s).second, "duplicate cell");
        top.push_back(s);
    }

    TssData data;
    data.x = OrderedComplex::build("tss2", verts, top);
    require(data.x->simplex_count(0) == 40 && data.x->simplex_count(1) == 232 &&
                data.x->simplex_count(2) == 384 && data.x->simplex_count(3) == 192,
            "face census");
    for (int i = 0; i < data.x->vertex_count(); ++i) {
        const auto& info = vinfo.at(data.x->vertex_name(i));
        data.kind.push_back(info[0]);
        data.glevel.push_back(info[2]);
        data.f1level.push_back(info[0] == 0 ? posmod(info[2] - info[1], 4) : (info[0] == 2 ? info[2] : -1));
        data.gridx.push_back(info[0] == 0 ? info[1] : -1);
    }
    return data;
}

std::set<int> support_of(const Cochain& c) {
    std::set<int> s;
    auto v = c.dense();
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.insert(static_cast<int>(i));
    return s;
}

std::set<int> tss_cells(const ComplexPtr& x, const std::vector<std::vector<std::string>>& cells) {
    std::set<int> out;
    for (const auto& cell : cells) {
        Simplex s;
        for (const auto& lab : cell) {
            int v = x->vertex_index(lab);
            require(v >= 0, "unknown label " + lab);
            s.push_back(v);
        }
        std::sort(s.begin(), s.end());
        int idx = x->index_of(s);
        require(idx >= 0, "listed cell is missing from the complex");
        out.insert(idx);
    }
    require(out.size() == cells.size(), "a listed cell repeats");
    return out;
}

// Window where the transferred square lives: triangles over the far columns.
const std::vector<std::vector<std::string>>& tss_p_cells() {
    static const std::vector<std::vector<std::string>> v = {
        {"21", "31", "40"}, {"21", "31", "52"}, {"03", "21", "52"}, {"15", "21", "52"},
        {"15", "33", "52"}, {"05", "15", "52"}, {"05", "15", "44"}, {"05", "15", "56"},
        {"05", "27", "56"}, {"05", "31", "56"}, {"17", "31", "56"}, {"21", "31", "56"}};
    return v;
}

// Square of c: sixteen triangles, all on the north side.
const std::vector<std::vector<std::string>>& tss_c2_cells() {
    static const std::vector<std::vector<std::string>> v = {
        {"00", "31", "40"}, {"31", "40", "52"}, {"21", "40", "52"}, {"11", "40", "52"},
        {"01", "40", "52"}, {"01", "30", "52"}, {"01", "13", "52"}, {"01", "35", "52"},
        {"23", "35", "52"}, {"05", "35", "52"}, {"05", "35", "44"}, {"05", "35", "56"},
        {"05", "17", "56"}, {"05", "31", "56"}, {"27", "31", "56"}, {"00", "31", "56"}};
    return v;
}

// The transfer chain t with dt = c^2 + p.
const std::vector<std::vector<std::string>>& tss_t_cells() {
    static const std::vector<std::vector<std::string>> v = {
        {"31", "40"}, {"21", "52"}, {"11", "52"}, {"01", "52"}, {"23", "52"},
        {"33", "52"}, {"05", "52"}, {"05", "44"}, {"05", "56"}, {"31", "56"}};
    return v;
}

// The cube of the special lift concentrates on one cell.
const std::vector<std::vector<std::string>>& tss_c3_cells() {
    static const std::vector<std::vector<std::string>> v = {{"00", "31", "40", "52"}};
    return v;
}

Cochain tss_c(const TssData& D) {
    const ComplexPtr& x = D.x;
    // Interior edges of the north side carrying c, by grid position.
    std::set<std::pair<int, int>> extra;
    auto add = [&](const std::string& u, const std::string& v) {
        int a = x->vertex_index(u), b = x->vertex_index(v);
        require(a >= 0 && b >= 0, "unknown label on an interior edge");
        if (a > b) std::swap(a, b);
        require(x->index_of({a, b}) >= 0, "interior edge " + u + " " + v + " is missing");
        extra.insert({a, b});
    };
    add(tss_north(0), tss_north(1));
    for (int x8 = 4; x8 <= 7; ++x8) add(tss_torus(x8, 0), tss_north(0));
    for (int x8 = 0; x8 <= 3; ++x8) add(tss_torus(x8, 0), tss_north(1));
    for (int x8 = 1; x8 <= 4; ++x8) add(tss_torus(x8, 1), tss_north(1));
    for (int x8 = 2; x8 <= 5; ++x8) add(tss_torus(x8, 2), tss_north(1));
    for (int x8 = 2; x8 <= 5; ++x8) add(tss_torus(x8, 2), tss_north(2));
    for (int x8 = 2; x8 <= 5; ++x8) add(tss_torus(x8, 2), tss_north(3));
    for (int x8 = 3; x8 <= 6; ++x8) add(tss_torus(x8, 3), tss_north(3));
    for (int x8 = 4; x8 <= 7; ++x8) add(tss_torus(x8, 0), tss_north(3));
    require(extra.size() == 33, "interior edge census");

    // Away from the north cones, c marks every edge crossing the base levels
    // 0 to 1; across the north side it follows the listed interior edges.
    Cochain c(x, Ring::Z2, 1);
    for (int e = 0; e < x->simplex_count(1); ++e) {
        const Simplex& s = x->simplex(1, e);
        int u = s[0], v = s[1];
        bool on;
        if (D.kind[u] != 1 && D.kind[v] != 1) {
            int lu = D.f1level[u], lv = D.f1level[v];
            on = (lu == 0 && lv == 1) || (lu == 1 && lv == 0);
        } else {
            on = extra.count({u, v}) > 0;
        }
        if (on) c.set(e, 1);
    }
    require(d(c).is_zero(), "c is not a cocycle");
    return c;
}

Cochain tss_p(const TssData& D) {
    // p marks the triangles whose image in the base spans the columns 6, 7
    // and the north cone point.
    Cochain p(D.x, Ring::Z2, 2);
    for (int f = 0; f < D.x->simplex_count(2); ++f) {
        std::set<int> img;
        for (int v : D.x->simplex(2, f)) img.insert(D.kind[v] == 0 ? D.gridx[v] : 8 + D.kind[v]);
        if (img == std::set<int>{6, 7, 9}) p.set(f, 1);
    }
    require(d(p).is_zero(), "p is not a cocycle");
    require(support_of(p) == tss_cells(D.x, tss_p_cells()), "p differs from its chart");
    return p;
}

Cochain tss_t(const ComplexPtr& x) {
    Cochain t(x, Ring::Z2, 1);
    for (int e : tss_cells(x, tss_t_cells())) t.set(e, 1);
    return t;
}

SignedChain tss_fundamental(const ComplexPtr& x, const Cochain& C) {
    // Orient the complex so the cube of the special lift integrates to -1.
    SignedChain m = fundamental_cycle(x);
    Rat v = integrate(cup(C, cup(C, C)), m);
    require(v == 1 || v == -1, "the lift cube pairs incorrectly with the orientation");
    if (v == 1) {
        SignedChain flip(x, 3);
        for (const auto& [i, co] : m.terms()) flip.set(i, -co);
        m = flip;
    }
    return m;
}

std::string list_cells(const ComplexPtr& x, int deg, const std::set<int>& cells, size_t cap = 4) {
    std::ostringstream os;
    size_t n = 0;
    for (int i : cells) {
        if (n == cap) {
            os << " ...";
            break;
        }
        if (n++) os << " ";
        os << x->simplex_to_string(x->simplex(deg, i));
    }
    return os.str();
}

std::string mismatch_detail(const ComplexPtr& x, int deg, const std::set<int>& got, const std::set<int>& want) {
    std::set<int> unexpected, missing;
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::inserter(unexpected, unexpected.end()));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::inserter(missing, missing.end()));
    std::ostringstream os;
    if (!unexpected.empty()) os << "unexpected " << list_cells(x, deg, unexpected);
    if (!missing.empty()) os << (unexpected.empty() ? "" : "; ") << "missing " << list_cells(x, deg, missing);
    return os.str();
}

}  // namespace

NamedExample simplex_boundary(int n) {
    if (n < 2 || n > 4) throw std::invalid_argument("simplex boundary dimension must be 2, 3, or 4");
    return make_simplex_boundary(n);
}

NamedExample rp2() {
    std::vector<std::string> verts = {"1", "2", "3", "4", "5", "6"};
    std::vector<Simplex> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                                  {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
    NamedExample ex;
    ex.complex = OrderedComplex::build("rp2", verts, faces);
    return ex;
}

NamedExample torus() {
    std::vector<std::string> verts = {"1", "2", "3", "4", "5", "6", "7"};
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        Simplex f1 = {i, (i + 1) % 7, (i + 3) % 7};
        Simplex f2 = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(f1.begin(), f1.end());
        std::sort(f2.begin(), f2.end());
        faces.push_back(f1);
        faces.push_back(f2);
    }
    NamedExample ex;
    ex.complex = OrderedComplex::build("torus", verts, faces);
    ex.fundamental = fundamental_cycle(ex.complex);
    return ex;
}

NamedExample t_s_sphere() {
    TssData D = tss_build();
    Cochain c = tss_c(D);
    Cochain p = tss_p(D);
    Cochain t = tss_t(D.x);
    Cochain C = special_lift(c);
    NamedExample ex;
    ex.complex = D.x;
    ex.fundamental = tss_fundamental(D.x, C);
    ex.named_cochains = {{"c", c}, {"p", p}, {"t", t}, {"C", C}};
    return ex;
}

NamedExample builtin_example(const std::string& name) {
    if (name == "sphere1") return simplex_boundary(2);
    if (name == "sphere2") return simplex_boundary(3);
    if (name == "sphere3") return simplex_boundary(4);
    if (name == "rp2") return rp2();
    if (name == "torus") return torus();
    if (name == "tss2") return t_s_sphere();
    throw std::invalid_argument("unknown builtin complex: " + name +
                                " (expected one of sphere1, sphere2, sphere3, rp2, torus, tss2)");
}

std::vector<std::string> builtin_names() {
    return {"sphere1", "sphere2", "sphere3", "rp2", "torus", "tss2"};
}

AppendixReport verify_appendix() {
    NamedExample ex = t_s_sphere();
    const ComplexPtr& x = ex.complex;
    const Cochain& c = ex.named_cochains.at("c");
    const Cochain& p = ex.named_cochains.at("p");
    const Cochain& t = ex.named_cochains.at("t");
    const Cochain& C = ex.named_cochains.at("C");
    const SignedChain& m = *ex.fundamental;

    AppendixReport rep;
    auto add = [&](const std::string& name, bool ok, std::string detail) {
        rep.steps.push_back({name, ok, std::move(detail)});
    };
    auto is_north = [&](int v) {
        char a = x->vertex_name(v)[0];
        return a == '4' || a == '5';
    };

    Cochain dc = d(c);
    add("c is a cocycle", dc.is_zero(),
        dc.is_zero() ? "dc = 0" : "dc is nonzero on " + list_cells(x, 2, support_of(dc)));

    Cochain c2 = cup(c, c);
    std::set<int> south_bad;
    for (int f : support_of(c2)) {
        const Simplex& s = x->simplex(2, f);
        if (!is_north(s[0]) && !is_north(s[1]) && !is_north(s[2])) south_bad.insert(f);
    }
    add("the square clears the southern half", south_bad.empty(),
        south_bad.empty() ? "no southern triangle carries c cup c"
                          : "c cup c is nonzero on " + list_cells(x, 2, south_bad));

    std::set<int> c2_want = tss_cells(x, tss_c2_cells());
    std::set<int> c2_got = support_of(c2);
    add("the square matches its chart", c2_got == c2_want,
        c2_got == c2_want ? "sixteen listed triangles" : mismatch_detail(x, 2, c2_got, c2_want));

    Cochain C3 = cup(C, cup(C, C));
    std::set<int> c3_want = tss_cells(x, tss_c3_cells());
    std::set<int> c3_got = support_of(C3);
    bool c3_ok = c3_got == c3_want && C3.dense()[*c3_want.begin()] == 1;
    add("the lift cube is a single positive cell", c3_ok,
        c3_ok ? "value 1 on " + list_cells(x, 3, c3_want) : mismatch_detail(x, 3, c3_got, c3_want));

    Rat c3_int = integrate(C3, m);
    add("the lift cube integrates to minus one", c3_int == -1, "integral = " + c3_int.str());

    Cochain dp = d(p);
    std::set<int> p_want = tss_cells(x, tss_p_cells());
    std::set<int> p_got = support_of(p);
    bool p_ok = dp.is_zero() && p_got == p_want;
    add("p is a cocycle on the listed window", p_ok,
        p_ok ? "twelve listed triangles"
             : (dp.is_zero() ? mismatch_detail(x, 2, p_got, p_want)
                             : "dp is nonzero on " + list_cells(x, 3, support_of(dp))));

    Cochain dt = d(t);
    bool transfer_ok = dt == c2 + p;
    add("t carries the square onto p", transfer_ok,
        transfer_ok ? "dt = c cup c + p"
                    : "dt + c cup c + p is nonzero on " + list_cells(x, 2, support_of(dt + c2 + p)));

    bool tdt = cup(t, dt).is_zero();
    bool tp = cup(t, p).is_zero();
    bool pt = cup(p, t).is_zero();
    add("the transfer products vanish", tdt && tp && pt,
        tdt && tp && pt ? "t dt = t p = p t = 0"
                        : std::string(!tdt ? "t dt " : "") + std::string(!tp ? "t p " : "") +
                              std::string(!pt ? "p t " : "") + "nonzero");

    Triple g(Cochain(x, Ring::QZ, 3), p, Cochain(x, Ring::Z2, 1));
    Triple moved = product(g, big_d_prime(t, Cochain(x, Ring::Z2, 0)));
    bool move_ok = moved.p == c2 && moved.a.is_zero() && moved.w == d(half(cup1(p, t)));
    add("the move onto the square is an exact coboundary", move_ok,
        move_ok ? "(0, p, 0) shifts to (d(p cup1 t)/2, c cup c, 0)" : "the shifted triple is off its closed form");

    Rat ev = mod1(Rat(1, 2) * integrate(cup(c, c2), m) + Rat(1, 4) * c3_int);
    add("evaluation", ev == Rat(1, 4), "value = " + ev.str());

    rep.evaluation = ev;
    rep.all_passed = true;
    for (const auto& s : rep.steps) rep.all_passed = rep.all_passed && s.passed;
    return rep;
}

}  // namespace gx
