#pragma once

#include "ohcp/complex.hpp"
#include "ohcp/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace ohcp {

/// Smith normal form: the nonzero diagonal d_1 | d_2 | ... | d_l, all positive.
/// When transforms are requested, `left * M * right` equals the diagonal form
/// and both transforms are unimodular.
struct SNFResult {
    std::vector<Integer> diagonal;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;

    std::size_t rank() const { return diagonal.size(); }
};

SNFResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);

/// The m x n matrix with the SNF diagonal in its leading entries.
IntMatrix diagonal_form(const SNFResult& r, std::size_t rows, std::size_t cols);

bool has_torsion(const SNFResult& r);

/// The diagonal entries greater than one.
std::vector<Integer> torsion_coefficients(const SNFResult& r);

struct HomologySummary {
    long long betti = 0;
    std::vector<Integer> torsion;
};

/// Rank of H_p(K) and the torsion coefficients read off SNF([d_{p+1}]).
HomologySummary homology_summary(const SimplicialComplex& k, int p);

/// A pair (L, L0) whose relative homology H_p(L, L0) has torsion.
struct TorsionWitness {
    std::vector<std::size_t> l_cols;   // (p+1)-simplices spanning L
    std::vector<std::size_t> l0_rows;  // p-simplices spanning L0
    Integer torsion_coefficient;
    std::vector<Integer> relative_snf;
};

/// Given a square submatrix of the boundary matrix with |det| > 1, builds the
/// pair from it: the chosen columns make up L, and the rows that touch L but
/// were left out of the submatrix make up L0. Throws ContractError otherwise.
TorsionWitness torsion_witness_from_submatrix(const IntMatrix& boundary,
                                              std::span<const std::size_t> rows,
                                              std::span<const std::size_t> cols);
TorsionWitness torsion_witness_from_submatrix(const SimplicialComplex& k, int p,
                                              std::span<const std::size_t> rows,
                                              std::span<const std::size_t> cols);

}  // namespace ohcp
