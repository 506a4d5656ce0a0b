#include "ohcp/solver.hpp"

#include "ohcp/errors.hpp"

#include <algorithm>
#include <limits>

namespace ohcp {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::L1: return "l1";
        case Variant::L0Box: return "l0";
        case Variant::TotalWeight: return "total";
    }
    return "unknown";
}

Variant parse_variant(const std::string& name) {
    if (name == "l1") return Variant::L1;
    if (name == "l0") return Variant::L0Box;
    if (name == "total") return Variant::TotalWeight;
    throw InputError("unknown variant '" + name + "' (expected l1, l0 or total)");
}

void OHCPInstance::validate() const {
    if (p < 0 || p > complex.dim()) throw InputError("chain dimension outside the complex");
    if (chain.size() != m()) throw InputError("chain length does not match the number of p-simplices");
    if (!weights.empty() && weights.size() != m())
        throw InputError("weight vector length does not match the number of p-simplices");
    if (variant == Variant::L0Box) {
        for (const auto& c : chain)
            if (abs(c) > 1) throw InputError("the l0 variant needs chain coefficients in {-1,0,1}");
        for (const auto& w : weights)
            if (abs(w) != 1) throw InputError("the l0 variant uses unit weights");
    }
    if (variant == Variant::TotalWeight) {
        if (!y_weights) throw InputError("the total variant needs weights on (p+1)-simplices");
        if (y_weights->size() != n())
            throw InputError("y-weight vector length does not match the number of (p+1)-simplices");
    }
}

std::vector<Integer> OHCPSolution::x_star() const {
    if (!integral) throw ContractError("solution is not integral");
    std::vector<Integer> out;
    for (const auto& v : x) out.push_back(v.get_num());
    return out;
}

std::vector<Integer> OHCPSolution::y_witness() const {
    if (!integral) throw ContractError("solution is not integral");
    std::vector<Integer> out;
    for (const auto& v : y) out.push_back(v.get_num());
    return out;
}

std::size_t OHCPSolution::nonzeros() const {
    return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](const Rational& v) { return v != 0; }));
}

namespace {

LinearProgram base_program(const OHCPInstance& inst) {
    inst.validate();
    const IntMatrix b = boundary_matrix_or_empty(inst.complex, inst.p + 1);
    const std::size_t m = inst.m(), n = inst.n();
    LinearProgram lp(2 * m + 2 * n);
    for (std::size_t i = 0; i < m; ++i) {
        lp.objective[i] = inst.weight(i);
        lp.objective[m + i] = inst.weight(i);
        std::vector<Rational> row(2 * m + 2 * n);
        row[i] = 1;
        row[m + i] = -1;
        for (std::size_t j = 0; j < n; ++j) {
            if (b(i, j) == 0) continue;
            row[2 * m + j] = -b(i, j);
            row[2 * m + n + j] = b(i, j);
        }
        lp.add_constraint(std::move(row), Rational(inst.chain[i]));
    }
    return lp;
}

}  // namespace

LinearProgram assemble_l1(const OHCPInstance& inst) {
    if (inst.variant != Variant::L1) throw InputError("assemble_l1 needs an l1 instance");
    return base_program(inst);
}

LinearProgram assemble_l0(const OHCPInstance& inst) {
    if (inst.variant != Variant::L0Box) throw InputError("assemble_l0 needs an l0 instance");
    LinearProgram lp = base_program(inst);
    for (std::size_t i = 0; i < 2 * inst.m(); ++i) lp.upper[i] = Rational(1);
    return lp;
}

LinearProgram assemble_total(const OHCPInstance& inst) {
    if (inst.variant != Variant::TotalWeight) throw InputError("assemble_total needs a total instance");
    LinearProgram lp = base_program(inst);
    const std::size_t m = inst.m(), n = inst.n();
    for (std::size_t j = 0; j < n; ++j) {
        const Rational v = abs((*inst.y_weights)[j]);
        lp.objective[2 * m + j] = v;
        lp.objective[2 * m + n + j] = v;
    }
    return lp;
}

LinearProgram assemble(const OHCPInstance& inst) {
    switch (inst.variant) {
        case Variant::L1: return assemble_l1(inst);
        case Variant::L0Box: return assemble_l0(inst);
        case Variant::TotalWeight: return assemble_total(inst);
    }
    throw InputError("unknown variant");
}

namespace {

Rational objective_of(const OHCPInstance& inst, const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational obj = 0;
    for (std::size_t i = 0; i < x.size(); ++i) obj += inst.weight(i) * abs(x[i]);
    if (inst.variant == Variant::TotalWeight)
        for (std::size_t j = 0; j < y.size(); ++j) obj += abs((*inst.y_weights)[j]) * abs(y[j]);
    return obj;
}

void check_homologous(const OHCPInstance& inst, const OHCPSolution& s) {
    const IntMatrix b = boundary_matrix_or_empty(inst.complex, inst.p + 1);
    for (std::size_t i = 0; i < inst.m(); ++i) {
        Rational rhs = inst.chain[i];
        for (std::size_t j = 0; j < inst.n(); ++j)
            if (b(i, j) != 0) rhs += b(i, j) * s.y[j];
        if (rhs != s.x[i]) throw std::logic_error("solution violates x = c + B y");
    }
}

}  // namespace

OHCPSolution solve(const OHCPInstance& inst) {
    const LinearProgram lp = assemble(inst);
    const LPSolution sol = simplex_solve(lp);
    if (sol.status != LPStatus::Optimal)
        throw std::logic_error("homologous chain program is always feasible and bounded below");

    const std::size_t m = inst.m(), n = inst.n();
    OHCPSolution out;
    out.x.resize(m);
    out.y.resize(n);
    for (std::size_t i = 0; i < m; ++i) out.x[i] = sol.x[i] - sol.x[m + i];
    for (std::size_t j = 0; j < n; ++j) out.y[j] = sol.x[2 * m + j] - sol.x[2 * m + n + j];
    check_homologous(inst, out);
    out.objective = objective_of(inst, out.x, out.y);
    auto is_int = [](const Rational& v) { return v.get_den() == 1; };
    out.integral = std::all_of(out.x.begin(), out.x.end(), is_int) && std::all_of(out.y.begin(), out.y.end(), is_int);
    if (!out.integral)
        out.torsion_note =
            "LP optimum is fractional; [d_" + std::to_string(inst.p + 1) +
            "] is not totally unimodular here. Run a torsion scan to locate a pair (L, L0) with relative torsion.";
    return out;
}

namespace {

// Objective accumulator: plain 64-bit when every reachable value fits,
// arbitrary precision otherwise.
template <class Acc>
OHCPSolution enumerate(const OHCPInstance& inst, const IntMatrix& b, long bound,
                       const std::vector<Acc>& xw, const std::vector<Acc>& yw) {
    const std::size_t m = inst.m(), n = inst.n();
    const bool box = inst.variant == Variant::L0Box;
    const bool pay_y = inst.variant == Variant::TotalWeight;

    std::vector<std::vector<std::pair<std::size_t, long>>> col(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i)
            if (b(i, j) != 0) col[j].emplace_back(i, b(i, j).get_si());

    std::vector<long> y(n, -bound);
    std::vector<long> x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = inst.chain[i].get_si();
    for (std::size_t j = 0; j < n; ++j)
        for (auto [i, v] : col[j]) x[i] += v * y[j];

    Acc obj = 0;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < m; ++i) {
        obj += xw[i] * Acc(std::labs(x[i]));
        violations += std::labs(x[i]) > 1;
    }
    if (pay_y)
        for (std::size_t j = 0; j < n; ++j) obj += yw[j] * Acc(std::labs(y[j]));

    auto shift = [&](std::size_t j, long delta) {
        for (auto [i, v] : col[j]) {
            const long before = x[i];
            x[i] += v * delta;
            obj += xw[i] * Acc(std::labs(x[i]) - std::labs(before));
            violations += (std::labs(x[i]) > 1) - (std::labs(before) > 1);
        }
        if (pay_y) obj += yw[j] * Acc(std::labs(y[j] + delta) - std::labs(y[j]));
        y[j] += delta;
    };

    bool have = false;
    Acc best = 0;
    std::vector<long> best_y;
    for (;;) {
        if ((!box || violations == 0) && (!have || obj < best)) {
            have = true;
            best = obj;
            best_y = y;
        }
        std::size_t j = n;
        while (j > 0 && y[j - 1] == bound) {
            shift(j - 1, -2 * bound);
            --j;
        }
        if (j == 0) break;
        shift(j - 1, 1);
    }
    if (!have) throw std::logic_error("no feasible candidate in the search box");

    OHCPSolution out;
    out.y.assign(best_y.begin(), best_y.end());
    out.x.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational xi = inst.chain[i];
        for (std::size_t j = 0; j < n; ++j)
            if (b(i, j) != 0) xi += b(i, j) * Rational(best_y[j]);
        out.x[i] = xi;
    }
    out.objective = objective_of(inst, out.x, out.y);
    out.integral = true;
    return out;
}

}  // namespace

OHCPSolution brute_force_oracle(const OHCPInstance& inst, long y_bound, std::uint64_t budget) {
    inst.validate();
    if (y_bound < 0) throw InputError("y bound must be non-negative");
    const std::size_t m = inst.m(), n = inst.n();

    std::uint64_t candidates = 1;
    const auto base = static_cast<std::uint64_t>(2 * y_bound + 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (candidates > budget / base) throw UndecidedError("oracle search space exceeds the budget");
        candidates *= base;
    }
    if (candidates > budget) throw UndecidedError("oracle search space exceeds the budget");

    const IntMatrix b = boundary_matrix_or_empty(inst.complex, inst.p + 1);
    // Common denominator turns all weights into integers.
    Integer scale = 1;
    for (std::size_t i = 0; i < m; ++i)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), inst.weight(i).get_den().get_mpz_t());
    if (inst.variant == Variant::TotalWeight)
        for (const auto& v : *inst.y_weights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Integer> xw(m), yw(n);
    for (std::size_t i = 0; i < m; ++i) xw[i] = Rational(inst.weight(i) * scale).get_num();
    if (inst.variant == Variant::TotalWeight)
        for (std::size_t j = 0; j < n; ++j) yw[j] = Rational(abs((*inst.y_weights)[j]) * scale).get_num();

    // Largest objective any candidate can reach.
    Integer ceiling = 0;
    Integer max_x_abs = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Integer reach = abs(inst.chain[i]);
        for (std::size_t j = 0; j < n; ++j) reach += abs(b(i, j)) * y_bound;
        ceiling += xw[i] * reach;
        if (reach > max_x_abs) max_x_abs = reach;
    }
    for (std::size_t j = 0; j < n; ++j) ceiling += yw[j] * y_bound;
    const Integer limit(std::numeric_limits<long>::max() / 4);
    if (max_x_abs > limit) throw InputError("chain coefficients too large for exhaustive search");

    if (ceiling < limit) {
        std::vector<long> sx(m), sy(n);
        for (std::size_t i = 0; i < m; ++i) sx[i] = xw[i].get_si();
        for (std::size_t j = 0; j < n; ++j) sy[j] = yw[j].get_si();
        return enumerate<long>(inst, b, y_bound, sx, sy);
    }
    return enumerate<Integer>(inst, b, y_bound, xw, yw);
}

bool existence_check(const OHCPInstance& inst) {
    inst.validate();
    // x = c with y = 0 satisfies x = c + B y, and only finitely many integer
    // chains weigh no more than c.
    const IntMatrix b = boundary_matrix_or_empty(inst.complex, inst.p + 1);
    const std::vector<Integer> zero(inst.n());
    const auto by = multiply(b, zero);
    for (std::size_t i = 0; i < inst.m(); ++i)
        if (inst.chain[i] + by[i] != inst.chain[i]) return false;
    return true;
}

}  // namespace ohcp
