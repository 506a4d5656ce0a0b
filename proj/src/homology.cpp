#include "ohcp/homology.hpp"

#include "ohcp/errors.hpp"

#include <algorithm>
#include <set>

namespace ohcp {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Elimination state; row operations are mirrored into `left`, column
// operations into `right` when tracking is on.
class Reducer {
public:
    Reducer(const IntMatrix& m, bool track)
        : a_(m), track_(track) {
        if (track_) {
            left_ = IntMatrix::identity(m.rows());
            right_ = IntMatrix::identity(m.cols());
        }
    }

    SNFResult run() {
        const std::size_t limit = std::min(a_.rows(), a_.cols());
        std::size_t t = 0;
        for (; t < limit; ++t) {
            if (!move_smallest_to(t)) break;
            reduce_pivot(t);
            if (a_(t, t) < 0) negate_row(t);
        }
        SNFResult r;
        for (std::size_t i = 0; i < t; ++i) r.diagonal.push_back(a_(i, i));
        if (track_) {
            r.left = std::move(left_);
            r.right = std::move(right_);
        }
        return r;
    }

private:
    // Smallest nonzero |entry| in the trailing block goes to (t, t).
    bool move_smallest_to(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool found = false;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                if (a_(i, j) == 0) continue;
                if (!found || cmpabs(a_(i, j), a_(bi, bj)) < 0) {
                    bi = i;
                    bj = j;
                    found = true;
                    if (abs(a_(i, j)) == 1) goto done;
                }
            }
    done:
        if (!found) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void reduce_pivot(std::size_t t) {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                add_row(i, t, -q);
                if (a_(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                add_col(j, t, -q);
                if (a_(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder is now smaller than the pivot; bring it in.
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < a_.rows(); ++i)
                    if (a_(i, t) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) bi = i, bj = t;
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (a_(t, j) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // Row and column are clear; enforce that the pivot divides the rest.
            bool divides = true;
            for (std::size_t i = t + 1; i < a_.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < a_.cols(); ++j)
                    if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row(t, i, Integer(1));
                        divides = false;
                        break;
                    }
            if (divides) return;
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        a_.swap_rows(a, b);
        if (track_) left_.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        a_.swap_cols(a, b);
        if (track_) right_.swap_cols(a, b);
    }
    void negate_row(std::size_t i) {
        a_.negate_row(i);
        if (track_) left_.negate_row(i);
    }
    // row[dst] += f * row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (a_(src, j) != 0) a_(dst, j) += f * a_(src, j);
        if (track_)
            for (std::size_t j = 0; j < left_.cols(); ++j)
                if (left_(src, j) != 0) left_(dst, j) += f * left_(src, j);
    }
    // col[dst] += f * col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            if (a_(i, src) != 0) a_(i, dst) += f * a_(i, src);
        if (track_)
            for (std::size_t i = 0; i < right_.rows(); ++i)
                if (right_(i, src) != 0) right_(i, dst) += f * right_(i, src);
    }

    IntMatrix a_;
    bool track_;
    IntMatrix left_;
    IntMatrix right_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m, bool want_transforms) {
    return Reducer(m, want_transforms).run();
}

IntMatrix diagonal_form(const SNFResult& r, std::size_t rows, std::size_t cols) {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < r.diagonal.size(); ++i) d(i, i) = r.diagonal[i];
    return d;
}

bool has_torsion(const SNFResult& r) {
    return std::any_of(r.diagonal.begin(), r.diagonal.end(), [](const Integer& d) { return d > 1; });
}

std::vector<Integer> torsion_coefficients(const SNFResult& r) {
    std::vector<Integer> t;
    for (const auto& d : r.diagonal)
        if (d > 1) t.push_back(d);
    return t;
}

HomologySummary homology_summary(const SimplicialComplex& k, int p) {
    if (p < 0 || p > k.dim()) throw InputError("homology dimension out of range");
    const auto chains = static_cast<long long>(k.count(p));
    const long long rank_down = p >= 1 ? static_cast<long long>(rank(boundary_matrix(k, p))) : 0;
    HomologySummary h;
    long long rank_up = 0;
    if (p + 1 <= k.dim()) {
        SNFResult up = smith_normal_form(boundary_matrix(k, p + 1));
        rank_up = static_cast<long long>(up.rank());
        h.torsion = torsion_coefficients(up);
    }
    h.betti = chains - rank_down - rank_up;
    return h;
}

TorsionWitness torsion_witness_from_submatrix(const IntMatrix& boundary,
                                              std::span<const std::size_t> rows,
                                              std::span<const std::size_t> cols) {
    if (rows.size() != cols.size()) throw ContractError("witness submatrix must be square");
    const IntMatrix s = boundary.submatrix(rows, cols);
    if (abs(det_int(s)) <= 1) throw ContractError("submatrix determinant has magnitude at most 1");

    TorsionWitness w;
    w.l_cols.assign(cols.begin(), cols.end());
    std::sort(w.l_cols.begin(), w.l_cols.end());
    const std::set<std::size_t> kept(rows.begin(), rows.end());
    std::vector<std::size_t> rel_rows;
    for (std::size_t i = 0; i < boundary.rows(); ++i) {
        bool touches = std::any_of(w.l_cols.begin(), w.l_cols.end(),
                                   [&](std::size_t j) { return boundary(i, j) != 0; });
        if (!touches) continue;
        if (kept.contains(i))
            rel_rows.push_back(i);
        else
            w.l0_rows.push_back(i);
    }
    // Nonsingular, so every kept row touches L and the relative matrix is S
    // up to a permutation.
    SNFResult r = smith_normal_form(boundary.submatrix(rel_rows, w.l_cols));
    w.relative_snf = r.diagonal;
    auto t = torsion_coefficients(r);
    if (t.empty()) throw ContractError("relative boundary matrix has no torsion");
    w.torsion_coefficient = t.back();
    return w;
}

TorsionWitness torsion_witness_from_submatrix(const SimplicialComplex& k, int p,
                                              std::span<const std::size_t> rows,
                                              std::span<const std::size_t> cols) {
    return torsion_witness_from_submatrix(boundary_matrix(k, p + 1), rows, cols);
}

}  // namespace ohcp
