#pragma once

#include "ohcp/complex.hpp"
#include "ohcp/matrix.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ohcp {

enum class TUStatus { TU, NotTU };
enum class TUMethod { MinorEnumeration, HellerTompkins, MobiusSearch, OrientableManifoldShortcut };

std::string to_string(TUStatus s);
std::string to_string(TUMethod m);

/// Square submatrix whose determinant has magnitude at least 2. Rows and
/// columns are ascending; `det` is taken in that order.
struct MinorWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Integer det;
};

struct TUVerdict {
    TUStatus status = TUStatus::TU;
    TUMethod method = TUMethod::MinorEnumeration;
    std::optional<MinorWitness> witness;
    /// Further methods that ran and agreed with the verdict.
    std::vector<TUMethod> confirmed_by;
};

struct TUOptions {
    std::size_t col_cap = 16;
    std::uint64_t mobius_budget = 2'000'000;  // DFS extensions
    std::size_t max_cycle_length = 0;          // 0: number of columns
    unsigned threads = 0;                      // 0: hardware concurrency
};

/// Checks every square minor, growing column subsets level by level and
/// dropping subsets whose rational rank is below their size (no superset of
/// such a subset can carry a nonsingular square minor of full size). Returns
/// the lexicographically smallest (cols, rows) witness of the smallest size.
/// Throws UndecidedError when the matrix has more than `col_cap` columns.
TUVerdict is_tu_minor_enumeration(const IntMatrix& m, std::size_t col_cap = 16, unsigned threads = 0);

/// Outcome of the Heller-Tompkins test on a matrix whose columns carry at
/// most two nonzeros.
struct HellerTompkinsResult {
    enum class Status { Certified, Inapplicable, NoPartition };
    Status status = Status::Inapplicable;
    std::vector<int> partition;  // 0 or 1 per row, when Certified
};

/// Looks for a split of the rows into two classes such that two nonzeros of
/// one column are of opposite sign when in the same class and of equal sign
/// when in different classes. The split is found by 2-colouring, with the
/// first row of every component placed in class 0.
HellerTompkinsResult heller_tompkins(const IntMatrix& m);

/// Normal form cycle matrix: ones on the diagonal and the subdiagonal, `beta`
/// in the top-right corner.
IntMatrix normal_form_cycle_matrix(std::size_t k, int beta);

/// det of the normal form: 1 + (-1)^(k+1) beta.
Integer cycle_matrix_det(std::size_t k, int beta);

struct CycleMatrixForm {
    std::size_t k = 0;
    int beta = 1;
    std::vector<std::size_t> row_order;  // normal-form row i is input row row_order[i]
    std::vector<std::size_t> col_order;
    std::vector<int> row_signs;          // indexed by normal-form position
    std::vector<int> col_signs;

    /// Cylinder cycle matrix iff beta = (-1)^k; otherwise Moebius.
    bool is_mobius() const { return beta != ((k % 2 == 0) ? 1 : -1); }
};

std::optional<CycleMatrixForm> classify_cycle_matrix(const IntMatrix& c);

/// A cyclic sequence of (p+1)-simplices in which neighbours share exactly one
/// p-face, the shared faces are distinct, and non-neighbours share no p-face.
struct CycleComplexWitness {
    std::vector<std::size_t> simplices;     // column indices, in cyclic order
    std::vector<std::size_t> shared_faces;  // shared_faces[i] lies in simplices[i] and simplices[i+1]
    bool orientable = true;
};

/// Visits every cycle complex among the columns of a boundary matrix until the
/// visitor returns false. Throws UndecidedError once `budget` DFS extensions
/// have been spent without finishing.
void enumerate_cycle_complexes(const IntMatrix& boundary,
                               const std::function<bool(const CycleComplexWitness&)>& visit,
                               std::uint64_t budget, std::size_t max_length = 0);

std::optional<CycleComplexWitness> find_mobius_subcomplex(const IntMatrix& boundary,
                                                          const TUOptions& opts = {});
std::optional<CycleComplexWitness> find_mobius_subcomplex(const SimplicialComplex& k, int q,
                                                          const TUOptions& opts = {});

/// Decision cascade for total unimodularity of [d_{p+1}]:
///   1. every p-simplex has at most two cofaces and the columns can be
///      oriented consistently: TU;
///   2. p <= 1: TU iff there is no Moebius cycle complex;
///   3. otherwise exhaustive minor enumeration, capped by `col_cap`.
/// The matrix overload accepts any re-signing of the boundary matrix.
TUVerdict tu_verdict(const IntMatrix& boundary, int p, const TUOptions& opts = {});
TUVerdict tu_verdict(const SimplicialComplex& k, int p, const TUOptions& opts = {});

}  // namespace ohcp
