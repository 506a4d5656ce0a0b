#pragma once

#include "ohcp/complex.hpp"
#include "ohcp/lp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ohcp {

enum class Variant { L1, L0Box, TotalWeight };

std::string to_string(Variant v);
Variant parse_variant(const std::string& name);  // "l1", "l0", "total"

/// An optimal homologous chain problem: find x = c + B y minimising the
/// weighted 1-norm of x (plus that of y for TotalWeight), B = [d_{p+1}].
/// Only absolute values of weights matter.
struct OHCPInstance {
    SimplicialComplex complex;
    int p = 1;
    std::vector<Integer> chain;        // length #p-simplices
    WeightVector weights;              // length #p-simplices; empty means all ones
    Variant variant = Variant::L1;
    std::optional<WeightVector> y_weights;  // length #(p+1)-simplices, TotalWeight only

    std::size_t m() const { return complex.count(p); }
    std::size_t n() const { return complex.count(p + 1); }
    Rational weight(std::size_t i) const { return weights.empty() ? Rational(1) : Rational(abs(weights[i])); }

    /// Throws InputError when sizes or the variant's requirements do not hold.
    void validate() const;
};

struct OHCPSolution {
    std::vector<Rational> x;  // optimal p-chain, possibly fractional
    std::vector<Rational> y;  // (p+1)-chain with x = c + B y
    Rational objective;
    bool integral = false;
    std::optional<std::string> torsion_note;

    /// Integer views, valid only when `integral`. Throws ContractError otherwise.
    std::vector<Integer> x_star() const;
    std::vector<Integer> y_witness() const;
    std::size_t nonzeros() const;
};

/// Variables are laid out as [x+ (m), x- (m), y+ (n), y- (n)], all >= 0, with
/// x+ - x- - B y+ + B y- = c.
LinearProgram assemble_l1(const OHCPInstance& inst);
/// L1 plus x+ <= 1 and x- <= 1; requires c in {-1,0,1} and unit weights.
LinearProgram assemble_l0(const OHCPInstance& inst);
/// L1 plus the weighted 1-norm of y in the objective.
LinearProgram assemble_total(const OHCPInstance& inst);
LinearProgram assemble(const OHCPInstance& inst);

/// Builds the LP for the instance's variant, solves it exactly, and maps the
/// vertex back to chains. A fractional optimum is returned as such, flagged
/// with integral = false, never rounded.
OHCPSolution solve(const OHCPInstance& inst);

/// Exhaustive search over y in [-y_bound, y_bound]^n. Among optimal
/// candidates the lexicographically smallest y wins. L0Box restricts x to
/// {-1,0,1}. Throws UndecidedError when (2 y_bound + 1)^n exceeds `budget`.
OHCPSolution brute_force_oracle(const OHCPInstance& inst, long y_bound,
                                std::uint64_t budget = 10'000'000);

/// The input chain itself is always feasible (x = c, y = 0), so a minimiser
/// exists over the finite set of homologous chains no heavier than c.
bool existence_check(const OHCPInstance& inst);

}  // namespace ohcp
