#pragma once

#include "ohcp/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ohcp {

using VertexId = std::int64_t;

/// An oriented simplex. The canonical form lists vertices in ascending order;
/// `sign` records the parity of the permutation that produced it.
struct Simplex {
    std::vector<VertexId> vertices;

    std::size_t dim() const { return vertices.empty() ? 0 : vertices.size() - 1; }

    /// Throws InputError on repeated or negative vertex ids.
    static Simplex canonical(std::vector<VertexId> vertices, int* sign = nullptr);

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// A finite, face-closed simplicial complex. Each dimension keeps its simplices
/// in lexicographic order, which fixes the elementary chain basis.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    std::size_t count(int q) const;
    const std::vector<Simplex>& simplices(int q) const;
    const Simplex& simplex(int q, std::size_t index) const { return by_dim_.at(q).at(index); }

    /// Index of a canonical simplex in the q-basis, if present.
    std::optional<std::size_t> index_of(const Simplex& s) const;

    friend SimplicialComplex build_closure(std::span<const Simplex> maximal);

private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::vector<std::map<std::vector<VertexId>, std::size_t>> index_;
};

/// Integer p-chain in the elementary basis. Zero coefficients are never stored.
struct Chain {
    int dim = 0;
    std::map<std::size_t, Integer> coeffs;

    void add(std::size_t index, const Integer& value);
    bool is_zero() const { return coeffs.empty(); }
    std::vector<Integer> dense(std::size_t length) const;
    static Chain from_dense(int dim, std::span<const Integer> values);

    friend bool operator==(const Chain&, const Chain&) = default;
};

using WeightVector = std::vector<Rational>;

SimplicialComplex build_closure(std::span<const Simplex> maximal);
SimplicialComplex build_closure(std::initializer_list<std::vector<VertexId>> maximal);

/// Matrix of the boundary operator from q-chains to (q-1)-chains: one column
/// per q-simplex, one row per (q-1)-simplex. Requires 1 <= q <= dim.
IntMatrix boundary_matrix(const SimplicialComplex& k, int q);

/// Like boundary_matrix, but yields an empty (#(q-1)-simplices x 0) matrix
/// when q exceeds the dimension. Used by solvers that allow p = dim.
IntMatrix boundary_matrix_or_empty(const SimplicialComplex& k, int q);

Chain boundary_of_chain(const SimplicialComplex& k, const Chain& c);

/// Boundary matrix of the pair (L, L0) in dimension p+1 -> p.
struct RelativeBoundary {
    IntMatrix matrix;
    std::vector<std::size_t> row_map;  // matrix row -> p-simplex index
    std::vector<std::size_t> col_map;  // matrix column -> (p+1)-simplex index
};

/// Columns of [d_{p+1}] listed in `l_cols`, then every row in `l0_rows` and
/// every all-zero row removed. Indices are kept in ascending order.
RelativeBoundary relative_boundary_matrix(const SimplicialComplex& k, int p,
                                          std::span<const std::size_t> l_cols,
                                          std::span<const std::size_t> l0_rows);

struct Orientation {
    enum class Status { Consistent, NonOrientable, NotPseudomanifold };
    Status status = Status::Consistent;
    std::vector<int> signs;  // one per column, only for Consistent
};

/// Per-column signs eps_j such that every row with two nonzeros sees them
/// with opposite sign after scaling. Works on any {-1,0,1} matrix.
Orientation orient_consistently(const IntMatrix& boundary);
Orientation orient_consistently(const SimplicialComplex& k, int q);

/// Squared p-volume of a simplex given its vertex coordinates, via the
/// Cayley-Menger determinant. Exact.
Rational squared_volume(std::span<const std::vector<Rational>> points);

/// Square root of a non-negative rational. Exact when the input is a square
/// of a rational; otherwise floor(sqrt(q) * denominator_cap) / denominator_cap.
Rational rational_sqrt(const Rational& q, const Integer& denominator_cap);

/// p-volume of every p-simplex. `coords` maps vertex id to its point.
WeightVector weights_from_coordinates(const SimplicialComplex& k,
                                      const std::map<VertexId, std::vector<Rational>>& coords,
                                      int p, const Integer& denominator_cap = Integer(1000000000));

}  // namespace ohcp
