#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// library's elimination code, so checks built on it stay independent.

#include "ohcp/complex.hpp"
#include "ohcp/io.hpp"
#include "ohcp/lp.hpp"
#include "ohcp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ohcp::test {

inline std::string data_path(const std::string& name) { return std::string(OHCP_DATA_DIR) + "/" + name; }

inline SimplicialComplex fixture(const std::string& name) { return io::load_complex(data_path(name)); }
inline IntMatrix matrix_fixture(const std::string& name) { return io::load_matrix(data_path(name)); }

/// Cofactor expansion along the first row.
inline Integer laplace_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const Integer minor = laplace_det(m.submatrix(rows, cols));
        total += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
    }
    return total;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Brute-force TU check: every square minor by cofactor expansion.
inline bool brute_force_tu(const IntMatrix& m) {
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k)
        for (const auto& r : subsets(m.rows(), k))
            for (const auto& c : subsets(m.cols(), k))
                if (abs(laplace_det(m.submatrix(r, c))) > 1) return false;
    return true;
}

/// gcd of all k x k minors.
inline Integer minor_gcd(const IntMatrix& m, std::size_t k) {
    Integer g = 0;
    for (const auto& r : subsets(m.rows(), k))
        for (const auto& c : subsets(m.cols(), k)) {
            const Integer d = laplace_det(m.submatrix(r, c));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return g;
}

/// Solves a square rational system by Gauss-Jordan; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Best objective over all vertices of {A x = b, lower <= x <= upper}.
/// Candidate vertices: choose a set of free (basic) columns, pin the rest at
/// a bound, solve. Assumes the program is bounded below; returns nullopt if
/// no vertex is feasible. Rows of A are first reduced to an independent set.
inline std::optional<Rational> vertex_enumeration_optimum(const LinearProgram& lp) {
    const std::size_t n = lp.variables();
    // independent rows via incremental rank test on [A | b]
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    {
        std::vector<std::vector<Rational>> echelon;
        for (std::size_t i = 0; i < lp.constraints(); ++i) {
            std::vector<Rational> r = lp.a[i];
            r.push_back(lp.b[i]);
            for (const auto& e : echelon) {
                std::size_t lead = 0;
                while (e[lead] == 0) ++lead;
                if (r[lead] != 0) {
                    const Rational f = r[lead] / e[lead];
                    for (std::size_t j = 0; j <= n; ++j) r[j] -= f * e[j];
                }
            }
            bool coeff_zero = true;
            for (std::size_t j = 0; j < n; ++j) coeff_zero = coeff_zero && r[j] == 0;
            if (coeff_zero) {
                if (r[n] != 0) return std::nullopt;  // inconsistent
                continue;
            }
            echelon.push_back(r);
            rows.push_back(lp.a[i]);
            rhs.push_back(lp.b[i]);
        }
    }
    const std::size_t m = rows.size();
    std::optional<Rational> best;
    for (const auto& basic : subsets(n, m)) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (std::find(basic.begin(), basic.end(), j) == basic.end()) others.push_back(j);
        const std::size_t combos = std::size_t{1} << others.size();
        for (std::size_t mask = 0; mask < combos; ++mask) {
            std::vector<Rational> x(n);
            bool ok = true;
            for (std::size_t t = 0; t < others.size(); ++t) {
                const std::size_t j = others[t];
                if (mask & (std::size_t{1} << t)) {
                    if (!lp.upper[j]) {
                        ok = false;
                        break;
                    }
                    x[j] = *lp.upper[j];
                } else {
                    x[j] = lp.lower[j];
                }
            }
            if (!ok) continue;
            std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
            std::vector<Rational> b(m);
            for (std::size_t i = 0; i < m; ++i) {
                b[i] = rhs[i];
                for (std::size_t t = 0; t < m; ++t) a[i][t] = rows[i][basic[t]];
                for (std::size_t j : others) b[i] -= rows[i][j] * x[j];
            }
            auto sol = solve_square(a, b);
            if (!sol) continue;
            for (std::size_t t = 0; t < m; ++t) {
                const std::size_t j = basic[t];
                x[j] = (*sol)[t];
                if (x[j] < lp.lower[j] || (lp.upper[j] && x[j] > *lp.upper[j])) ok = false;
            }
            if (!ok) continue;
            Rational obj = 0;
            for (std::size_t j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
            if (!best || obj < *best) best = obj;
        }
    }
    return best;
}

/// Smallest weighted 1-norm of c + B y over y in [-bound, bound]^n, by plain
/// depth-first enumeration. With `unit_box`, only x in {-1,0,1}^m counts.
/// nullopt when no candidate qualifies.
inline std::optional<Rational> exhaustive_min(const IntMatrix& b, const std::vector<Integer>& c,
                                              const std::vector<Rational>& w, long bound, bool unit_box = false) {
    const std::size_t m = b.rows(), n = b.cols();
    Integer den = 1;
    for (const auto& v : w) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<long> iw(m), x(m);
    for (std::size_t i = 0; i < m; ++i) {
        iw[i] = Rational(abs(w[i]) * den).get_num().get_si();
        x[i] = c[i].get_si();
    }
    std::vector<std::vector<std::pair<std::size_t, long>>> col(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (b(i, j) != 0) col[j].emplace_back(i, b(i, j).get_si());
    std::optional<long> best;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == n) {
            long total = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (unit_box && (x[i] > 1 || x[i] < -1)) return;
                total += iw[i] * (x[i] < 0 ? -x[i] : x[i]);
            }
            if (!best || total < *best) best = total;
            return;
        }
        for (long v = -bound; v <= bound; ++v) {
            for (auto [i, e] : col[j]) x[i] += e * v;
            self(self, j + 1);
            for (auto [i, e] : col[j]) x[i] -= e * v;
        }
    };
    rec(rec, 0);
    if (!best) return std::nullopt;
    Rational r(Integer(*best), den);
    r.canonicalize();
    return r;
}

/// Small surfaces for randomized solver checks: fans and triangle strips
/// (disks), tetrahedron surfaces and bipyramids (spheres), banded rings
/// (cylinders), with vertex ids shuffled so orientations vary. At most `max_triangles` (<= 8)
/// triangles and 20 edges.
inline SimplicialComplex random_surface(std::mt19937& rng, std::string* kind = nullptr, int max_triangles = 8) {
    const int ring = max_triangles >= 8 ? 4 : 3;
    std::vector<std::vector<VertexId>> tris;
    const int shape = std::uniform_int_distribution<int>(0, 3)(rng);
    if (shape == 0) {
        const int k = std::uniform_int_distribution<int>(3, max_triangles)(rng);
        for (int i = 0; i < k; ++i) tris.push_back({0, 1 + i, 1 + (i + 1) % k});
        if (kind) *kind = "disk";
    } else if (shape == 1) {
        const int k = std::uniform_int_distribution<int>(2, ring)(rng);
        if (k == 2) tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (int i = 0; k > 2 && i < k; ++i) {
            tris.push_back({0, 2 + i, 2 + (i + 1) % k});
            tris.push_back({1, 2 + i, 2 + (i + 1) % k});
        }
        if (kind) *kind = "sphere";
    } else if (shape == 2) {
        const int k = std::uniform_int_distribution<int>(3, ring)(rng);
        for (int i = 0; i < k; ++i) {
            const int j = (i + 1) % k;
            tris.push_back({i, j, k + i});
            tris.push_back({j, k + i, k + j});
        }
        if (kind) *kind = "cylinder";
    } else {
        const int t = std::uniform_int_distribution<int>(2, max_triangles)(rng);
        for (int i = 0; i < t; ++i) tris.push_back({i, i + 1, i + 2});
        if (kind) *kind = "disk";
    }
    std::vector<VertexId> relabel(16);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Simplex> maximal;
    for (auto& t : tris) {
        for (auto& v : t) v = relabel[v];
        maximal.push_back(Simplex::canonical(t));
    }
    return build_closure(maximal);
}

/// Random feasible program with N <= 6, M <= 4; some variables unbounded above.
inline LinearProgram random_lp(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> nd(1, 6);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> md(1, std::min<std::size_t>(4, n));
    const std::size_t m = md(rng);
    std::uniform_int_distribution<long> coef(-4, 4), den(1, 3), ub(1, 4);
    std::bernoulli_distribution has_upper(0.6);
    LinearProgram lp(n);
    // Feasible by construction: pick a point in the box, then set b = A x0.
    std::vector<Rational> x0(n);
    for (std::size_t j = 0; j < n; ++j) {
        lp.objective[j] = Rational(coef(rng), den(rng));
        lp.objective[j].canonicalize();
        if (has_upper(rng)) lp.upper[j] = Rational(ub(rng));
        x0[j] = Rational(std::uniform_int_distribution<long>(0, 1)(rng));
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational> row(n);
        Rational rhs = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = Rational(coef(rng), den(rng));
            row[j].canonicalize();
            rhs += row[j] * x0[j];
        }
        lp.add_constraint(row, rhs);
    }
    return lp;
}

// Every variable boxed keeps the program bounded so the vertex oracle applies.
inline LinearProgram random_boxed_lp(std::mt19937& rng) {
    auto lp = random_lp(rng);
    for (auto& u : lp.upper)
        if (!u) u = Rational(5);
    return lp;
}

/// Relative boundary matrix S of the Moebius strip: rows 0,3,8,9,10,2 and
/// columns 5..0 of moebius_b2.mat, written out by hand.
inline IntMatrix moebius_s() {
    return IntMatrix{{1, 0, 0, 0, 0, 1},  {-1, 1, 0, 0, 0, 0}, {0, -1, 1, 0, 0, 0},
                     {0, 0, -1, 1, 0, 0}, {0, 0, 0, -1, 1, 0}, {0, 0, 0, 0, 1, -1}};
}

/// The 7x7 submatrix W of [d_3] for the seven-tetrahedra complex.
inline IntMatrix w7_matrix() {
    return IntMatrix{{-1, -1, -1, -1, 0, 0, 0}, {1, 0, 0, 0, -1, 0, 0}, {-1, 0, 0, 0, 0, -1, 0},
                     {1, 0, 0, 0, 0, 0, -1},    {0, 1, 0, 0, 1, 0, 0},  {0, 0, -1, 0, 0, 1, 0},
                     {0, 0, 0, 1, 0, 0, 1}};
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

/// Random row and column sign flips (a re-orientation of simplices).
inline IntMatrix reorient(const IntMatrix& b, std::mt19937& rng) {
    IntMatrix r = b;
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (flip(rng)) r.negate_row(i);
    for (std::size_t j = 0; j < r.cols(); ++j)
        if (flip(rng)) r.negate_col(j);
    return r;
}

}  // namespace ohcp::test
