#pragma once

#include "ohcp/matrix.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace ohcp {

/// min f.x  subject to  A x = b,  lower <= x <= upper.
/// Lower bounds are finite (default 0); an empty upper bound means +infinity.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> a;  // M rows of N entries
    std::vector<Rational> b;
    std::vector<Rational> lower;
    std::vector<std::optional<Rational>> upper;

    LinearProgram() = default;
    /// Zero objective, no constraints yet, bounds 0 <= x < infinity.
    explicit LinearProgram(std::size_t variables);

    std::size_t variables() const { return objective.size(); }
    std::size_t constraints() const { return a.size(); }

    void add_constraint(std::vector<Rational> row, Rational rhs);

    /// Throws InputError on inconsistent sizes or lower > upper.
    void validate() const;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<Rational> x;
    Rational objective;
    std::vector<std::size_t> basis;  // basic columns, ascending
    std::size_t pivots = 0;
};

/// Two-phase bounded-variable primal simplex in exact rational arithmetic with
/// Bland's smallest-index rule for both the entering and the leaving variable.
/// An optimal result is always a vertex: every non-basic variable sits at one
/// of its bounds and the basic columns are linearly independent.
LPSolution simplex_solve(const LinearProgram& lp);

/// True iff every coordinate of the solution is an integer. The flags record
/// whether the constraint matrix was known to be totally unimodular with
/// integral right-hand side (the case in which integrality is guaranteed);
/// they do not change the answer.
bool verify_vertex_integrality(const LPSolution& sol, bool a_is_tu, bool b_integral);

/// Human-readable dump ("min" / "st" / "bounds" sections, exact p/q values).
void write_lp(std::ostream& out, const LinearProgram& lp);

}  // namespace ohcp
