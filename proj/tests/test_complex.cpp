#include "ohcp/complex.hpp"
#include "ohcp/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ohcp;
using ohcp::test::fixture;

TEST_CASE("closure of a single triangle") {
    auto k = build_closure({{0, 1, 2}});
    CHECK(k.dim() == 2);
    CHECK(k.count(0) == 3);
    CHECK(k.count(1) == 3);
    CHECK(k.count(2) == 1);
    CHECK(k.simplices(1)[0].vertices == std::vector<VertexId>{0, 1});
    CHECK(k.simplices(1)[1].vertices == std::vector<VertexId>{0, 2});
    CHECK(k.simplices(1)[2].vertices == std::vector<VertexId>{1, 2});
}

TEST_CASE("closure edge cases") {
    std::vector<Simplex> none;
    auto empty = build_closure(none);
    CHECK(empty.dim() == -1);
    CHECK(empty.count(0) == 0);

    auto hollow = build_closure({{0, 1}, {1, 2}, {0, 2}});
    CHECK(hollow.dim() == 1);
    CHECK(hollow.count(0) == 3);
    CHECK(hollow.count(1) == 3);
    CHECK(hollow.count(2) == 0);

    CHECK_THROWS_AS(build_closure({{0, 1, 1}}), InputError);
    CHECK_THROWS_AS(build_closure({{0, -1}}), InputError);
}

TEST_CASE("canonical form records permutation parity") {
    int sign = 0;
    auto s = Simplex::canonical({2, 0, 1}, &sign);
    CHECK(s.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(sign == 1);
    Simplex::canonical({1, 0, 2}, &sign);
    CHECK(sign == -1);
    Simplex::canonical({3, 2, 1, 0}, &sign);
    CHECK(sign == 1);
}

TEST_CASE("basis order does not depend on input order") {
    std::vector<Simplex> tris{{{0, 1, 2}}, {{1, 2, 4}}, {{2, 3, 5}}, {{0, 5, 1}}, {{4, 5, 2}}};
    const auto ref = build_closure(tris);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(tris.begin(), tris.end(), rng);
        for (auto& t : tris) std::shuffle(t.vertices.begin(), t.vertices.end(), rng);
        const auto k = build_closure(tris);
        for (int q = 0; q <= 2; ++q) CHECK(k.simplices(q) == ref.simplices(q));
        CHECK(boundary_matrix(k, 2) == boundary_matrix(ref, 2));
    }
}

TEST_CASE("boundary matrix of a triangle and an edge") {
    auto tri = build_closure({{0, 1, 2}});
    auto b2 = boundary_matrix(tri, 2);
    REQUIRE(b2.rows() == 3);
    REQUIRE(b2.cols() == 1);
    // rows [0,1], [0,2], [1,2]
    CHECK(b2(0, 0) == 1);
    CHECK(b2(1, 0) == -1);
    CHECK(b2(2, 0) == 1);

    auto b1 = boundary_matrix(build_closure({{0, 1}}), 1);
    CHECK(b1 == IntMatrix{{-1}, {1}});

    CHECK_THROWS_AS(boundary_matrix(tri, 3), InputError);
    CHECK_THROWS_AS(boundary_matrix(tri, 0), InputError);
}

TEST_CASE("two triangles sharing an edge") {
    auto k = build_closure({{0, 1, 2}, {1, 2, 3}});
    auto b2 = boundary_matrix(k, 2);
    // edges: [0,1] [0,2] [1,2] [1,3] [2,3]; [1,2] is the shared row.
    // d[0,1,2] = [1,2] - [0,2] + [0,1];  d[1,2,3] = [2,3] - [1,3] + [1,2]
    CHECK(b2 == IntMatrix{{1, 0}, {-1, 0}, {1, 1}, {0, -1}, {0, 1}});
    CHECK((boundary_matrix(k, 1) * b2).is_zero());
}

TEST_CASE("boundary of boundary vanishes and columns have q+1 unit entries") {
    for (const char* name : {"tetra_surface.scx", "w7.scx", "octahedron_solid.scx", "rp2.scx", "torus7.scx",
                             "two_tets.scx", "hourglass.scx"}) {
        CAPTURE(name);
        const auto k = fixture(name);
        for (int q = 1; q <= k.dim(); ++q) {
            const auto b = boundary_matrix(k, q);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                CHECK(b.nonzeros_in_col(j) == static_cast<std::size_t>(q) + 1);
                for (std::size_t i = 0; i < b.rows(); ++i) CHECK(abs(b(i, j)) <= 1);
            }
            if (q + 1 <= k.dim()) CHECK((b * boundary_matrix(k, q + 1)).is_zero());
        }
    }
}

TEST_CASE("boundary of chains") {
    auto tri = build_closure({{0, 1, 2}});
    Chain c{2, {}};
    c.add(0, 1);
    auto d = boundary_of_chain(tri, c);
    CHECK(d.dim == 1);
    CHECK(d.dense(3) == std::vector<Integer>{1, -1, 1});

    CHECK(boundary_of_chain(tri, Chain{2, {}}).is_zero());
    CHECK_THROWS_AS(boundary_of_chain(tri, Chain{0, {}}), InputError);

    // Consistently oriented closed surface has no boundary.
    const auto sphere = fixture("tetra_surface.scx");
    auto o = orient_consistently(sphere, 2);
    REQUIRE(o.status == Orientation::Status::Consistent);
    Chain all{2, {}};
    for (std::size_t j = 0; j < o.signs.size(); ++j) all.add(j, o.signs[j]);
    CHECK(boundary_of_chain(sphere, all).is_zero());
}

TEST_CASE("relative boundary matrices") {
    const auto strip = fixture("moebius6.scx");
    std::vector<std::size_t> all_tris{0, 1, 2, 3, 4, 5};
    const auto b = boundary_matrix(strip, 2);
    std::vector<std::size_t> boundary_edges;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b.nonzeros_in_row(i) == 1) boundary_edges.push_back(i);
    REQUIRE(boundary_edges.size() == 6);
    auto rel = relative_boundary_matrix(strip, 1, all_tris, boundary_edges);
    CHECK(rel.matrix.rows() == 6);
    CHECK(rel.matrix.cols() == 6);
    CHECK(rel.row_map.size() == 6);
    // Same matrix as the quoted S up to permutations and signs: both are
    // Moebius cycle matrices of size 6, with SNF diagonal (1,1,1,1,1,2).
    CHECK(abs(det_int(rel.matrix)) == 2);

    auto tri = build_closure({{0, 1, 2}});
    std::vector<std::size_t> one{0}, none, edges{0, 1, 2};
    auto full = relative_boundary_matrix(tri, 1, one, none);
    CHECK(full.matrix == boundary_matrix(tri, 2));
    auto nothing = relative_boundary_matrix(tri, 1, one, edges);
    CHECK(nothing.matrix.rows() == 0);
    CHECK(nothing.matrix.cols() == 1);

    std::vector<std::size_t> bad{7};
    CHECK_THROWS_AS(relative_boundary_matrix(tri, 1, bad, none), InputError);
}

TEST_CASE("relative matrix with L = K and empty L0 equals the boundary matrix") {
    for (const char* name : {"torus7.scx", "rp2.scx", "octahedron_solid.scx", "w7.scx"}) {
        CAPTURE(name);
        const auto k = fixture(name);
        const int p = k.dim() - 1;
        std::vector<std::size_t> cols(k.count(p + 1));
        std::iota(cols.begin(), cols.end(), 0);
        std::vector<std::size_t> none;
        CHECK(relative_boundary_matrix(k, p, cols, none).matrix == boundary_matrix(k, p + 1));
    }
}

TEST_CASE("consistent orientation") {
    CHECK(orient_consistently(fixture("tetra_surface.scx"), 2).status == Orientation::Status::Consistent);
    CHECK(orient_consistently(fixture("torus7.scx"), 2).status == Orientation::Status::Consistent);
    CHECK(orient_consistently(fixture("moebius6.scx"), 2).status == Orientation::Status::NonOrientable);
    CHECK(orient_consistently(fixture("rp2.scx"), 2).status == Orientation::Status::NonOrientable);
    auto fin = build_closure({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK(orient_consistently(fin, 2).status == Orientation::Status::NotPseudomanifold);
}

TEST_CASE("consistent signs leave one +1 and one -1 in every interior row") {
    for (const char* name : {"tetra_surface.scx", "torus7.scx", "cylinder6.scx", "hourglass.scx", "disk_fan.scx",
                             "octahedron_solid.scx"}) {
        CAPTURE(name);
        const auto k = fixture(name);
        auto b = boundary_matrix(k, k.dim());
        auto o = orient_consistently(b);
        REQUIRE(o.status == Orientation::Status::Consistent);
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (o.signs[j] < 0) b.negate_col(j);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            if (b.nonzeros_in_row(i) != 2) continue;
            Integer sum = 0;
            for (std::size_t j = 0; j < b.cols(); ++j) sum += b(i, j);
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("volumes from coordinates") {
    auto seg = build_closure({{0, 1}});
    std::map<VertexId, std::vector<Rational>> unit{{0, {0, 0}}, {1, {1, 0}}};
    CHECK(weights_from_coordinates(seg, unit, 1) == WeightVector{1});
    std::map<VertexId, std::vector<Rational>> pyth{{0, {0, 0}}, {1, {3, 4}}};
    CHECK(weights_from_coordinates(seg, pyth, 1) == WeightVector{5});

    auto tri = build_closure({{0, 1, 2}});
    std::map<VertexId, std::vector<Rational>> right{{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}};
    CHECK(weights_from_coordinates(tri, right, 2) == WeightVector{Rational(1, 2)});
    // Hypotenuse sqrt(2) is rounded down to the denominator cap.
    auto edges = weights_from_coordinates(tri, right, 1, Integer(1000));
    CHECK(edges[2] == Rational(707, 500));

    std::map<VertexId, std::vector<Rational>> missing{{0, {0, 0}}, {1, {1, 0}}};
    CHECK_THROWS_AS(weights_from_coordinates(tri, missing, 2), InputError);
    std::map<VertexId, std::vector<Rational>> flat{{0, {0}}, {1, {1}}, {2, {2}}};
    CHECK_THROWS_AS(weights_from_coordinates(tri, flat, 2), InputError);
}

TEST_CASE("tetrahedron volume") {
    auto tet = build_closure({{0, 1, 2, 3}});
    std::map<VertexId, std::vector<Rational>> c{{0, {0, 0, 0}}, {1, {1, 0, 0}}, {2, {0, 1, 0}}, {3, {0, 0, 1}}};
    CHECK(weights_from_coordinates(tet, c, 3) == WeightVector{Rational(1, 6)});
    CHECK(squared_volume(std::vector<std::vector<Rational>>{{0, 0, 0}}) == 1);
}
