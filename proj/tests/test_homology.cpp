#include "ohcp/errors.hpp"
#include "ohcp/homology.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ohcp;
using namespace ohcp::test;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("SNF small cases") {
    CHECK(smith_normal_form(IntMatrix{{2}}).diagonal == ints({2}));
    CHECK(smith_normal_form(IntMatrix{{-3}}).diagonal == ints({3}));
    CHECK(smith_normal_form(IntMatrix(3, 2)).diagonal.empty());
    CHECK(smith_normal_form(IntMatrix()).diagonal.empty());
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == ints({1, 6}));
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal == ints({2, 6, 12}));
}

TEST_CASE("SNF of the Moebius fixtures") {
    CHECK(smith_normal_form(matrix_fixture("moebius_b2.mat")).diagonal == ints({1, 1, 1, 1, 1, 1}));
    CHECK(smith_normal_form(moebius_s()).diagonal == ints({1, 1, 1, 1, 1, 2}));
}

TEST_CASE("torsion predicates") {
    SNFResult r;
    r.diagonal = ints({1, 1, 1});
    CHECK_FALSE(has_torsion(r));
    r.diagonal = ints({1, 1, 2});
    CHECK(has_torsion(r));
    CHECK(torsion_coefficients(r) == ints({2}));
    r.diagonal.clear();
    CHECK_FALSE(has_torsion(r));
}

TEST_CASE("SNF divisibility and determinant product on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 8);
        const auto rows = dim(rng), cols = dim(rng);
        const auto m = random_matrix(rng, rows, cols, -4, 4);
        const auto r = smith_normal_form(m);
        CHECK(r.rank() == rank(m));
        for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
            CHECK(r.diagonal[i] > 0);
            if (i + 1 < r.diagonal.size()) CHECK(r.diagonal[i + 1] % r.diagonal[i] == 0);
        }
        if (rows == cols && rows <= 6) {
            const Integer d = laplace_det(m);
            if (d != 0) {
                Integer prod = 1;
                for (const auto& v : r.diagonal) prod *= v;
                CHECK(prod == abs(d));
            }
        }
    }
}

TEST_CASE("SNF prefix products equal gcds of minors") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        const auto m = random_matrix(rng, dim(rng), dim(rng), -3, 3);
        const auto r = smith_normal_form(m);
        Integer prefix = 1;
        for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
            const Integer g = minor_gcd(m, k);
            if (k <= r.diagonal.size()) {
                prefix *= r.diagonal[k - 1];
                CHECK(prefix == g);
            } else {
                CHECK(g == 0);
            }
        }
    }
    // One 6x6 case against the full minor gcd.
    const auto s = moebius_s();
    const auto r = smith_normal_form(s);
    CHECK(minor_gcd(s, 6) == 2);
    CHECK(minor_gcd(s, 5) == 1);
    CHECK(r.diagonal.back() == 2);
}

TEST_CASE("SNF transforms reproduce the diagonal form") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 7);
        const auto m = random_matrix(rng, dim(rng), dim(rng), -5, 5);
        const auto r = smith_normal_form(m, true);
        REQUIRE(r.left);
        REQUIRE(r.right);
        CHECK(*r.left * m * *r.right == diagonal_form(r, m.rows(), m.cols()));
        CHECK(abs(det_int(*r.left)) == 1);
        CHECK(abs(det_int(*r.right)) == 1);
    }
    const auto r = smith_normal_form(matrix_fixture("prjctvpln_b2.mat"), true);
    CHECK(*r.left * matrix_fixture("prjctvpln_b2.mat") * *r.right == diagonal_form(r, 15, 10));
}

TEST_CASE("homology summaries") {
    auto hollow = build_closure({{0, 1}, {1, 2}, {0, 2}});
    auto h = homology_summary(hollow, 1);
    CHECK(h.betti == 1);
    CHECK(h.torsion.empty());

    h = homology_summary(fixture("moebius6.scx"), 1);
    CHECK(h.betti == 1);
    CHECK(h.torsion.empty());

    h = homology_summary(fixture("rp2.scx"), 1);
    CHECK(h.betti == 0);
    CHECK(h.torsion == ints({2}));

    h = homology_summary(fixture("torus7.scx"), 1);
    CHECK(h.betti == 2);
    CHECK(h.torsion.empty());
    CHECK(homology_summary(fixture("torus7.scx"), 2).betti == 1);
    CHECK(homology_summary(fixture("torus7.scx"), 0).betti == 1);
    CHECK(homology_summary(fixture("tetra_surface.scx"), 2).betti == 1);
    CHECK(homology_summary(fixture("rp2.scx"), 2).betti == 0);
}

TEST_CASE("torsion witness from the Moebius matrix fixture") {
    const auto b = matrix_fixture("moebius_b2.mat");
    std::vector<std::size_t> rows{0, 3, 8, 9, 10, 2}, cols{5, 4, 3, 2, 1, 0};
    const auto w = torsion_witness_from_submatrix(b, rows, cols);
    CHECK(w.torsion_coefficient == 2);
    CHECK(w.l_cols == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(w.relative_snf == ints({1, 1, 1, 1, 1, 2}));
    // L0 holds the rows touched by L but not selected.
    for (std::size_t r : w.l0_rows) {
        CHECK(std::find(rows.begin(), rows.end(), r) == rows.end());
        CHECK(b.nonzeros_in_row(r) > 0);
    }
}

TEST_CASE("torsion witness from the projective plane matrix fixture") {
    const auto b = matrix_fixture("prjctvpln_b2.mat");
    std::vector<std::size_t> rows{5, 11, 13, 12, 7}, cols{6, 9, 3, 8, 4};
    CHECK(det_int(b.submatrix(rows, cols)) == -2);
    const auto w = torsion_witness_from_submatrix(b, rows, cols);
    CHECK(w.torsion_coefficient == 2);
    CHECK(w.relative_snf.back() == 2);
}

TEST_CASE("torsion witness rejects unimodular submatrices") {
    const auto b = matrix_fixture("moebius_b2.mat");
    std::vector<std::size_t> rows{0}, cols{0};
    if (b(0, 0) == 0) rows = {1};
    CHECK_THROWS_AS(torsion_witness_from_submatrix(b, rows, cols), ContractError);
    std::vector<std::size_t> two{0, 1};
    CHECK_THROWS_AS(torsion_witness_from_submatrix(b, two, cols), ContractError);

    const auto sphere = fixture("tetra_surface.scx");
    std::vector<std::size_t> r3{0, 1, 2}, c3{0, 1, 2};
    CHECK_THROWS_AS(torsion_witness_from_submatrix(sphere, 1, r3, c3), ContractError);
}

TEST_CASE("torsion witness on a built complex") {
    const auto strip = fixture("moebius6.scx");
    const auto b = boundary_matrix(strip, 2);
    std::vector<std::size_t> cols{0, 1, 2, 3, 4, 5}, rows;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (b.nonzeros_in_row(i) == 2) rows.push_back(i);
    REQUIRE(rows.size() == 6);
    const auto w = torsion_witness_from_submatrix(strip, 1, rows, cols);
    CHECK(w.torsion_coefficient == 2);
    CHECK(w.l0_rows.size() == 6);
}
