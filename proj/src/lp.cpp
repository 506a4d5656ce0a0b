#include "ohcp/lp.hpp"

#include "ohcp/errors.hpp"

#include <algorithm>
#include <ostream>

namespace ohcp {

LinearProgram::LinearProgram(std::size_t variables)
    : objective(variables), lower(variables), upper(variables) {}

void LinearProgram::add_constraint(std::vector<Rational> row, Rational rhs) {
    if (row.size() != variables()) throw InputError("constraint row has the wrong length");
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
}

void LinearProgram::validate() const {
    const std::size_t n = variables();
    if (lower.size() != n || upper.size() != n) throw InputError("bound vectors have the wrong length");
    if (b.size() != a.size()) throw InputError("right-hand side has the wrong length");
    for (const auto& row : a)
        if (row.size() != n) throw InputError("constraint row has the wrong length");
    for (std::size_t j = 0; j < n; ++j)
        if (upper[j] && *upper[j] < lower[j]) throw InputError("lower bound exceeds upper bound");
}

namespace {

class Simplex {
public:
    explicit Simplex(const LinearProgram& lp) : lp_(lp), n_(lp.variables()) {
        // Shift to 0 <= y <= cap, flip rows so that the right-hand side is
        // non-negative, and append one artificial column per row.
        m_ = lp.constraints();
        cols_ = n_ + m_;
        cap_.resize(cols_);
        for (std::size_t j = 0; j < n_; ++j)
            if (lp.upper[j]) cap_[j] = *lp.upper[j] - lp.lower[j];
        t_.assign(m_, std::vector<Rational>(cols_));
        beta_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rational rhs = lp.b[i];
            for (std::size_t j = 0; j < n_; ++j) rhs -= lp.a[i][j] * lp.lower[j];
            const bool flip = rhs < 0;
            for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
            t_[i][n_ + i] = 1;
            beta_[i] = flip ? Rational(-rhs) : rhs;
            basis_[i] = n_ + i;
        }
        at_upper_.assign(cols_, false);
        is_basic_.assign(cols_, false);
        for (std::size_t i = 0; i < m_; ++i) is_basic_[n_ + i] = true;
        allowed_.assign(cols_, true);
    }

    LPSolution solve() {
        LPSolution sol;
        // Phase I: minimise the sum of artificials.
        std::vector<Rational> cost(cols_);
        for (std::size_t i = 0; i < m_; ++i) cost[n_ + i] = 1;
        if (run(cost) != LPStatus::Optimal) throw std::logic_error("phase I cannot be unbounded");
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= n_) infeasibility += beta_[i];
        if (infeasibility > 0) {
            sol.status = LPStatus::Infeasible;
            sol.pivots = pivots_;
            return sol;
        }
        drive_out_artificials();
        for (std::size_t j = n_; j < cols_; ++j) allowed_[j] = false;

        // Phase II on the original objective.
        cost.assign(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = lp_.objective[j];
        sol.status = run(cost);
        sol.pivots = pivots_;
        if (sol.status != LPStatus::Optimal) return sol;

        sol.x.resize(n_);
        for (std::size_t j = 0; j < n_; ++j)
            if (!is_basic_[j]) sol.x[j] = lp_.lower[j] + (at_upper_[j] ? cap_[j].value() : Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            sol.x[basis_[i]] = lp_.lower[basis_[i]] + beta_[i];
            sol.basis.push_back(basis_[i]);
        }
        std::sort(sol.basis.begin(), sol.basis.end());
        sol.objective = 0;
        for (std::size_t j = 0; j < n_; ++j) sol.objective += lp_.objective[j] * sol.x[j];
        return sol;
    }

private:
    LPStatus run(const std::vector<Rational>& cost) {
        // reduced costs d_j = c_j - c_B . T_j
        std::vector<Rational> d(cost);
        for (std::size_t i = 0; i < m_; ++i) {
            const Rational& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[i][j] != 0) d[j] -= cb * t_[i][j];
        }
        for (;;) {
            // Bland: smallest improving index.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
                if (!allowed_[j] || is_basic_[j]) continue;
                if ((!at_upper_[j] && d[j] < 0) || (at_upper_[j] && d[j] > 0)) enter = j;
            }
            if (enter == cols_) return LPStatus::Optimal;
            const int dir = at_upper_[enter] ? -1 : 1;

            // Ratio test; ties go to the smallest variable index.
            std::optional<Rational> best;
            std::size_t leave_row = m_;
            std::size_t leave_var = cols_;
            if (cap_[enter]) {
                best = *cap_[enter];
                leave_var = enter;
            }
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational alpha = dir * t_[i][enter];
                if (alpha == 0) continue;
                std::optional<Rational> limit;
                if (alpha > 0)
                    limit = beta_[i] / alpha;
                else if (cap_[basis_[i]])
                    limit = (*cap_[basis_[i]] - beta_[i]) / (-alpha);
                if (!limit) continue;
                if (!best || *limit < *best || (*limit == *best && basis_[i] < leave_var)) {
                    best = limit;
                    leave_row = i;
                    leave_var = basis_[i];
                }
            }
            if (!best) return LPStatus::Unbounded;
            const Rational step = *best;

            for (std::size_t i = 0; i < m_; ++i)
                if (t_[i][enter] != 0) beta_[i] -= dir * t_[i][enter] * step;

            if (leave_var == enter) {  // bound flip, basis unchanged
                at_upper_[enter] = !at_upper_[enter];
                ++pivots_;
                continue;
            }

            const std::size_t out = basis_[leave_row];
            at_upper_[out] = dir * t_[leave_row][enter] < 0;
            Rational entering_value = (at_upper_[enter] ? *cap_[enter] : Rational(0)) + dir * step;
            pivot(leave_row, enter, d);
            beta_[leave_row] = entering_value;
            is_basic_[out] = false;
            is_basic_[enter] = true;
            at_upper_[enter] = false;
            basis_[leave_row] = enter;
            ++pivots_;
        }
    }

    void pivot(std::size_t r, std::size_t c, std::vector<Rational>& d) {
        const Rational inv = 1 / t_[r][c];
        for (auto& v : t_[r])
            if (v != 0) v *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || t_[i][c] == 0) continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
        }
        if (d[c] != 0) {
            const Rational f = d[c];
            for (std::size_t j = 0; j < cols_; ++j)
                if (t_[r][j] != 0) d[j] -= f * t_[r][j];
        }
    }

    void drive_out_artificials() {
        std::vector<Rational> unused(cols_);
        for (std::size_t i = 0; i < m_;) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            std::size_t c = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (!is_basic_[j] && t_[i][j] != 0) {
                    c = j;
                    break;
                }
            if (c == n_) {  // redundant row
                is_basic_[basis_[i]] = false;
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
                beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
                continue;
            }
            // Degenerate pivot: the artificial sits at zero, so nothing moves.
            const Rational value = at_upper_[c] ? *cap_[c] : Rational(0);
            is_basic_[basis_[i]] = false;
            pivot(i, c, unused);
            beta_[i] = value;
            is_basic_[c] = true;
            at_upper_[c] = false;
            basis_[i] = c;
            ++pivots_;
            ++i;
        }
    }

    const LinearProgram& lp_;
    std::size_t n_;
    std::size_t m_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::optional<Rational>> cap_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> beta_;
    std::vector<std::size_t> basis_;
    std::vector<bool> at_upper_;
    std::vector<bool> is_basic_;
    std::vector<bool> allowed_;
    std::size_t pivots_ = 0;
};

}  // namespace

LPSolution simplex_solve(const LinearProgram& lp) {
    lp.validate();
    return Simplex(lp).solve();
}

bool verify_vertex_integrality(const LPSolution& sol, bool, bool) {
    if (sol.status != LPStatus::Optimal) throw ContractError("integrality check needs an optimal solution");
    return std::all_of(sol.x.begin(), sol.x.end(), [](const Rational& v) { return v.get_den() == 1; });
}

void write_lp(std::ostream& out, const LinearProgram& lp) {
    out << "min\n";
    for (std::size_t j = 0; j < lp.variables(); ++j) out << (j ? " " : "") << to_pq(lp.objective[j]);
    out << "\nst\n";
    for (std::size_t i = 0; i < lp.constraints(); ++i) {
        for (std::size_t j = 0; j < lp.variables(); ++j) out << (j ? " " : "") << to_pq(lp.a[i][j]);
        out << " = " << to_pq(lp.b[i]) << '\n';
    }
    out << "bounds\n";
    for (std::size_t j = 0; j < lp.variables(); ++j)
        out << to_pq(lp.lower[j]) << ' ' << (lp.upper[j] ? to_pq(*lp.upper[j]) : std::string("inf")) << '\n';
}

}  // namespace ohcp
