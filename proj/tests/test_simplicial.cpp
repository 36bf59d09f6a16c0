#include "doctest.h"
#include "test_util.hpp"

#include "gx/exact_linear.hpp"
#include "gx/simplicial.hpp"

#include <set>
#include <string>
#include <vector>

using namespace gx;

namespace {

ComplexPtr boundary_of_triangle() {
    return OrderedComplex::build("circle", {"0", "1", "2"}, {{0, 1}, {0, 2}, {1, 2}});
}

ComplexPtr boundary_of_tetrahedron() {
    return OrderedComplex::build("sphere", {"0", "1", "2", "3"},
                                 {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

}  // namespace

TEST_CASE("closure generates all faces exactly once") {
    auto x = OrderedComplex::build("tet", {"a", "b", "c", "d"}, {{0, 1, 2, 3}});
    CHECK(x->top_dim() == 3);
    CHECK(x->simplex_count(0) == 4);
    CHECK(x->simplex_count(1) == 6);
    CHECK(x->simplex_count(2) == 4);
    CHECK(x->simplex_count(3) == 1);
    CHECK(x->has_simplex({1, 3}));
    CHECK(x->index_of({9, 10}) == -1);
    // per-dimension lists are lexicographically sorted
    const auto& edges = x->simplices(1);
    for (size_t i = 1; i < edges.size(); ++i) CHECK(edges[i - 1] < edges[i]);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(OrderedComplex::build("x", {"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedComplex::build("x", {"a", "b"}, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedComplex::build("x", {"a", "b"}, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedComplex::build("x", {"a", "b"}, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedComplex::build("x", {"a b"}, {}), std::invalid_argument);
}

TEST_CASE("parser reports line numbers and round-trips") {
    const std::string text =
        "complex demo\n"
        "vertex a\n"
        "vertex b\n"
        "vertex c\n"
        "# a comment line\n"
        "simplex a b c\n"
        "cycle +a,b -a,c +b,c\n";
    auto x = parse_complex(text);
    CHECK(x->name() == "demo");
    CHECK(x->simplex_count(2) == 1);
    REQUIRE(x->attached_cycles().size() == 1);

    auto y = parse_complex(emit_complex(*x));
    CHECK(y->name() == x->name());
    for (int d = 0; d <= 2; ++d) {
        REQUIRE(y->simplex_count(d) == x->simplex_count(d));
        for (int i = 0; i < x->simplex_count(d); ++i) CHECK(y->simplex(d, i) == x->simplex(d, i));
    }
    CHECK(y->attached_cycles() == x->attached_cycles());

    auto expect_error = [](const std::string& bad, const std::string& needle) {
        try {
            parse_complex(bad);
            FAIL_CHECK("expected parse failure for: " << bad);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("complex x\nvertex a\nvertex a\n", "line 3: duplicate vertex a");
    expect_error("complex x\nvertex a\nsimplex a q\n", "line 3: unknown vertex q");
    expect_error("complex x\nvertex a\nvertex b\nsimplex b a\n", "line 4: non-increasing tuple");
    expect_error("complex x\nfrobnicate\n", "line 2: malformed line");
    expect_error("vertex a\n", "line 1");
    expect_error("complex x\nvertex a\ncycle a\n", "line 3: malformed cycle term");
}

TEST_CASE("coboundary matrices compose to zero") {
    for (const ComplexPtr& x : {boundary_of_tetrahedron(),
                                OrderedComplex::build("solid", {"0", "1", "2", "3", "4"}, {{0, 1, 2, 3, 4}})}) {
        for (int k = 0; k + 2 <= x->top_dim(); ++k) {
            auto d1 = coboundary_matrix(*x, k);
            auto d2 = coboundary_matrix(*x, k + 1);
            auto z = d2 * d1;
            for (int r = 0; r < z.rows(); ++r)
                for (int c = 0; c < z.cols(); ++c) CHECK(z.at(r, c) == 0);
        }
    }
}

TEST_CASE("coboundary entries follow the sign convention") {
    auto x = boundary_of_triangle();
    auto d0 = coboundary_matrix(*x, 0);
    // row for edge {0,1}: (dc)({0,1}) = c({1}) - c({0})
    int row = x->index_of({0, 1});
    CHECK(d0.at(row, 0) == -1);
    CHECK(d0.at(row, 1) == 1);
    CHECK(d0.at(row, 2) == 0);
}

TEST_CASE("chain boundary is dual to the coboundary matrix") {
    auto x = boundary_of_tetrahedron();
    gxtest::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        SignedChain c(x, 2);
        for (int i = 0; i < x->simplex_count(2); ++i) c.set(i, rng.range(-3, 3));
        auto bd = c.boundary();
        auto d1 = coboundary_matrix(*x, 1);  // rows: triangles, cols: edges
        for (int e = 0; e < x->simplex_count(1); ++e) {
            Int expect = 0;
            for (int t = 0; t < x->simplex_count(2); ++t) expect += d1.at(t, e) * c.coefficient(t);
            CHECK(bd.coefficient(e) == expect);
        }
    }
}

TEST_CASE("fundamental cycle of a simplex boundary alternates") {
    auto x = boundary_of_tetrahedron();
    auto z = fundamental_cycle(x);
    CHECK(z.boundary().is_zero());
    // propagation fixes the first top simplex to +1; signs alternate with the
    // omitted vertex for the boundary of a simplex
    std::vector<int> expect = {1, -1, 1, -1};  // faces sorted lex: 012, 013, 023, 123
    // face with omitted vertex i has sign (-1)^i relative to 0123; lex order
    // lists {0,1,2}={omit 3}, {0,1,3}={omit 2}, {0,2,3}={omit 1}, {1,2,3}={omit 0}
    std::vector<int> omitted = {3, 2, 1, 0};
    int base = (z.coefficient(0) == 1) ? 1 : -1;
    for (int i = 0; i < 4; ++i) {
        int sign = (omitted[i] % 2 == 0) ? 1 : -1;
        int sign0 = (omitted[0] % 2 == 0) ? 1 : -1;
        CHECK(z.coefficient(i) == Int(base * sign * sign0));
    }
}

TEST_CASE("fundamental cycle failures are detected") {
    // two triangles sharing an edge: boundary edges lie in only one triangle
    auto open_disk = OrderedComplex::build("disk", {"0", "1", "2", "3"}, {{0, 1, 2}, {1, 2, 3}});
    CHECK_THROWS_WITH_AS(fundamental_cycle(open_disk),
                         doctest::Contains("not a closed pseudo-manifold"), std::invalid_argument);

    // two disjoint circles triangulated as hollow triangles: not connected
    auto two = OrderedComplex::build("two", {"0", "1", "2", "3", "4", "5"},
                                     {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK_THROWS_WITH_AS(fundamental_cycle(two), doctest::Contains("not connected"), std::invalid_argument);
}

TEST_CASE("attached cycle overrides propagation and is validated") {
    const std::string text =
        "complex circle\n"
        "vertex 0\nvertex 1\nvertex 2\n"
        "simplex 0 1\nsimplex 0 2\nsimplex 1 2\n"
        "cycle +0,1 -0,2 +1,2\n";
    auto x = parse_complex(text);
    auto z = fundamental_cycle(x);
    CHECK(z.coefficient(x->index_of({0, 1})) == 1);
    CHECK(z.coefficient(x->index_of({0, 2})) == -1);
    CHECK(z.coefficient(x->index_of({1, 2})) == 1);

    const std::string bad =
        "complex circle\n"
        "vertex 0\nvertex 1\nvertex 2\n"
        "simplex 0 1\nsimplex 0 2\nsimplex 1 2\n"
        "cycle +0,1 +0,2 +1,2\n";
    auto xb = parse_complex(bad);
    CHECK_THROWS_WITH_AS(fundamental_cycle(xb), doctest::Contains("nonzero boundary"), std::invalid_argument);
}

TEST_CASE("simplicial map validation") {
    auto x = boundary_of_triangle();
    auto pt = OrderedComplex::build("pt", {"p"}, {});
    // collapse everything to the point: valid, degenerate on edges
    SimplicialMap collapse(x, pt, {0, 0, 0});
    CHECK(collapse.nondegenerate_on({0}));
    CHECK(!collapse.nondegenerate_on({0, 1}));

    // order-reversing map on an edge must be rejected
    auto seg = OrderedComplex::build("seg", {"a", "b"}, {{0, 1}});
    CHECK_THROWS_AS(SimplicialMap(seg, seg, {1, 0}), std::invalid_argument);

    // image must span a simplex of the target
    auto gap = OrderedComplex::build("gap", {"a", "b"}, {});
    CHECK_THROWS_AS(SimplicialMap(seg, gap, {0, 1}), std::invalid_argument);
}

TEST_CASE("barycentric subdivision of the triangle boundary") {
    auto x = boundary_of_triangle();
    auto sub = barycentric_subdivision(x);
    // hexagon: 6 vertices, 6 edges
    CHECK(sub.complex->simplex_count(0) == 6);
    CHECK(sub.complex->simplex_count(1) == 6);
    CHECK(sub.complex->top_dim() == 1);
    // the projection exists and is a valid ordered simplicial map by construction
    REQUIRE(sub.projection != nullptr);
    CHECK(sub.projection->source() == sub.complex);
    CHECK(sub.projection->target() == x);
    // barycenter of an edge projects to its greatest vertex
    for (int v = 0; v < sub.complex->vertex_count(); ++v) {
        int d = sub.vertex_to_simplex_dim[v];
        int i = sub.vertex_to_simplex_idx[v];
        CHECK(sub.projection->vertex_image(v) == x->simplex(d, i).back());
    }
}

TEST_CASE("barycentric subdivision of a 2-sphere") {
    auto x = boundary_of_tetrahedron();
    auto sub = barycentric_subdivision(x);
    // vertices: one per simplex of x
    CHECK(sub.complex->simplex_count(0) == 4 + 6 + 4);
    // top simplices: one flag per (triangle, edge, vertex) chain: 4 * 3 * 2
    CHECK(sub.complex->simplex_count(2) == 24);
    CHECK(sub.complex->top_dim() == 2);
    // Euler characteristic preserved
    int euler = sub.complex->simplex_count(0) - sub.complex->simplex_count(1) + sub.complex->simplex_count(2);
    CHECK(euler == 2);
    // subdivision of a closed orientable manifold still carries a fundamental cycle
    auto z = fundamental_cycle(sub.complex);
    CHECK(z.boundary().is_zero());
    CHECK(z.terms().size() == 24);

    // vertex order is by (dimension, tuple)
    for (int v = 1; v < sub.complex->vertex_count(); ++v) {
        int d0 = sub.vertex_to_simplex_dim[v - 1], d1 = sub.vertex_to_simplex_dim[v];
        CHECK(d0 <= d1);
        if (d0 == d1)
            CHECK(x->simplex(d0, sub.vertex_to_simplex_idx[v - 1]) < x->simplex(d1, sub.vertex_to_simplex_idx[v]));
    }
}
