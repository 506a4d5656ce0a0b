#include "ohcp/complex.hpp"

#include "ohcp/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace ohcp {

Simplex Simplex::canonical(std::vector<VertexId> vertices, int* sign) {
    int parity = 1;
    // Insertion sort so the permutation parity falls out of the swap count.
    for (std::size_t i = 1; i < vertices.size(); ++i)
        for (std::size_t j = i; j > 0 && vertices[j - 1] > vertices[j]; --j) {
            std::swap(vertices[j - 1], vertices[j]);
            parity = -parity;
        }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) throw InputError("negative vertex id " + std::to_string(vertices[i]));
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw InputError("repeated vertex " + std::to_string(vertices[i]) + " in simplex");
    }
    if (sign) *sign = parity;
    return Simplex{std::move(vertices)};
}

std::size_t SimplicialComplex::count(int q) const {
    if (q < 0 || q > dim()) return 0;
    return by_dim_[static_cast<std::size_t>(q)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int q) const {
    static const std::vector<Simplex> none;
    if (q < 0 || q > dim()) return none;
    return by_dim_[static_cast<std::size_t>(q)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.vertices.empty()) return std::nullopt;
    const auto q = static_cast<int>(s.dim());
    if (q > dim()) return std::nullopt;
    const auto& idx = index_[static_cast<std::size_t>(q)];
    if (auto it = idx.find(s.vertices); it != idx.end()) return it->second;
    return std::nullopt;
}

SimplicialComplex build_closure(std::span<const Simplex> maximal) {
    std::vector<std::set<std::vector<VertexId>>> faces;
    for (const Simplex& raw : maximal) {
        if (raw.vertices.empty()) throw InputError("empty simplex");
        Simplex s = Simplex::canonical(raw.vertices);
        const std::size_t n = s.vertices.size();
        if (faces.size() < n) faces.resize(n);
        // Every nonempty subset of the vertex set, as a bitmask.
        if (n > 20) throw InputError("simplex dimension too large for closure");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s.vertices[i]);
            faces[face.size() - 1].insert(std::move(face));
        }
    }
    SimplicialComplex k;
    k.by_dim_.resize(faces.size());
    k.index_.resize(faces.size());
    for (std::size_t q = 0; q < faces.size(); ++q) {
        for (const auto& f : faces[q]) {
            k.index_[q].emplace(f, k.by_dim_[q].size());
            k.by_dim_[q].push_back(Simplex{f});
        }
    }
    return k;
}

SimplicialComplex build_closure(std::initializer_list<std::vector<VertexId>> maximal) {
    std::vector<Simplex> s;
    for (const auto& v : maximal) s.push_back(Simplex{v});
    return build_closure(s);
}

void Chain::add(std::size_t index, const Integer& value) {
    if (value == 0) return;
    auto [it, inserted] = coeffs.emplace(index, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) coeffs.erase(it);
    }
}

std::vector<Integer> Chain::dense(std::size_t length) const {
    std::vector<Integer> v(length);
    for (const auto& [i, c] : coeffs) {
        if (i >= length) throw InputError("chain index out of range");
        v[i] = c;
    }
    return v;
}

Chain Chain::from_dense(int dim, std::span<const Integer> values) {
    Chain c{dim, {}};
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) c.coeffs.emplace(i, values[i]);
    return c;
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int q) {
    if (q < 1 || q > k.dim())
        throw InputError("boundary dimension " + std::to_string(q) + " outside [1, " +
                         std::to_string(k.dim()) + "]");
    const auto& cols = k.simplices(q);
    IntMatrix b(k.count(q - 1), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& v = cols[j].vertices;
        for (std::size_t drop = 0; drop < v.size(); ++drop) {
            Simplex face;
            face.vertices.reserve(v.size() - 1);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (i != drop) face.vertices.push_back(v[i]);
            b(*k.index_of(face), j) = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return b;
}

IntMatrix boundary_matrix_or_empty(const SimplicialComplex& k, int q) {
    if (q >= 1 && q > k.dim()) return IntMatrix(k.count(q - 1), 0);
    return boundary_matrix(k, q);
}

Chain boundary_of_chain(const SimplicialComplex& k, const Chain& c) {
    if (c.dim < 1 || c.dim > k.dim())
        throw InputError("cannot take the boundary of a " + std::to_string(c.dim) + "-chain");
    const IntMatrix b = boundary_matrix(k, c.dim);
    const auto x = c.dense(b.cols());
    const auto y = multiply(b, x);
    return Chain::from_dense(c.dim - 1, y);
}

RelativeBoundary relative_boundary_matrix(const SimplicialComplex& k, int p,
                                          std::span<const std::size_t> l_cols,
                                          std::span<const std::size_t> l0_rows) {
    const IntMatrix b = boundary_matrix(k, p + 1);
    std::set<std::size_t> cols(l_cols.begin(), l_cols.end());
    std::set<std::size_t> excluded(l0_rows.begin(), l0_rows.end());
    if (!cols.empty() && *cols.rbegin() >= b.cols()) throw InputError("L column index out of range");
    if (!excluded.empty() && *excluded.rbegin() >= b.rows()) throw InputError("L0 row index out of range");

    RelativeBoundary rel;
    rel.col_map.assign(cols.begin(), cols.end());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (excluded.contains(i)) continue;
        bool nonzero = std::any_of(cols.begin(), cols.end(), [&](std::size_t j) { return b(i, j) != 0; });
        if (nonzero) rel.row_map.push_back(i);
    }
    rel.matrix = b.submatrix(rel.row_map, rel.col_map);
    return rel;
}

Orientation orient_consistently(const IntMatrix& b) {
    Orientation out;
    std::vector<std::vector<std::size_t>> row_cols(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) row_cols[i].push_back(j);
        if (row_cols[i].size() > 2) {
            out.status = Orientation::Status::NotPseudomanifold;
            return out;
        }
    }
    std::vector<std::vector<std::size_t>> col_rows(b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (row_cols[i].size() == 2)
            for (std::size_t j : row_cols[i]) col_rows[j].push_back(i);

    std::vector<int> eps(b.cols(), 0);
    for (std::size_t start = 0; start < b.cols(); ++start) {
        if (eps[start] != 0) continue;
        eps[start] = 1;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t j = queue.front();
            queue.pop_front();
            for (std::size_t i : col_rows[j]) {
                const std::size_t other = row_cols[i][0] == j ? row_cols[i][1] : row_cols[i][0];
                // eps_j b(i,j) + eps_other b(i,other) = 0
                const int want = -eps[j] * sgn(b(i, j)) * sgn(b(i, other));
                if (eps[other] == 0) {
                    eps[other] = want;
                    queue.push_back(other);
                } else if (eps[other] != want) {
                    out.status = Orientation::Status::NonOrientable;
                    return out;
                }
            }
        }
    }
    out.signs = std::move(eps);
    return out;
}

Orientation orient_consistently(const SimplicialComplex& k, int q) {
    return orient_consistently(boundary_matrix(k, q));
}

Rational squared_volume(std::span<const std::vector<Rational>> points) {
    const std::size_t n = points.size();
    if (n <= 1) return 1;  // a point has unit 0-volume
    const std::size_t p = n - 1;
    // Bordered matrix of squared distances, scaled to integers for det_int.
    std::vector<std::vector<Rational>> cm(n + 1, std::vector<Rational>(n + 1));
    for (std::size_t i = 1; i <= n; ++i) {
        cm[0][i] = cm[i][0] = 1;
        for (std::size_t j = 1; j <= n; ++j) {
            const auto& a = points[i - 1];
            const auto& b = points[j - 1];
            if (a.size() != b.size()) throw InputError("coordinates of differing dimension");
            Rational d2 = 0;
            for (std::size_t t = 0; t < a.size(); ++t) d2 += (a[t] - b[t]) * (a[t] - b[t]);
            cm[i][j] = d2;
        }
    }
    Integer lcm = 1;
    for (const auto& row : cm)
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    IntMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            Rational scaled = cm[i][j] * lcm;
            m(i, j) = scaled.get_num();
        }
    // det(cm) = det(m) / lcm^(n+1)
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), n + 1);
    Rational det(det_int(m), scale);
    det.canonicalize();

    Integer fact = 1;
    for (std::size_t i = 2; i <= p; ++i) fact *= static_cast<unsigned long>(i);
    Integer denom;
    mpz_mul_2exp(denom.get_mpz_t(), Integer(fact * fact).get_mpz_t(), p);
    Rational v2 = det / Rational(denom);
    if ((p + 1) % 2 == 1) v2 = -v2;
    v2.canonicalize();
    return v2;
}

Rational rational_sqrt(const Rational& q, const Integer& denominator_cap) {
    if (q < 0) throw InputError("square root of a negative number");
    if (mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
    // floor(sqrt(num * cap^2 / den)) / cap
    Integer scaled = q.get_num() * denominator_cap * denominator_cap;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Rational r(root, denominator_cap);
    r.canonicalize();
    return r;
}

WeightVector weights_from_coordinates(const SimplicialComplex& k,
                                      const std::map<VertexId, std::vector<Rational>>& coords,
                                      int p, const Integer& denominator_cap) {
    WeightVector w;
    w.reserve(k.count(p));
    std::size_t ambient = 0;
    bool first = true;
    for (const Simplex& s : k.simplices(p)) {
        std::vector<std::vector<Rational>> pts;
        for (VertexId v : s.vertices) {
            auto it = coords.find(v);
            if (it == coords.end()) throw InputError("missing coordinates for vertex " + std::to_string(v));
            if (first) {
                ambient = it->second.size();
                first = false;
            } else if (it->second.size() != ambient) {
                throw InputError("vertex " + std::to_string(v) + " has a different ambient dimension");
            }
            pts.push_back(it->second);
        }
        if (ambient < static_cast<std::size_t>(p))
            throw InputError("ambient dimension smaller than simplex dimension");
        w.push_back(rational_sqrt(squared_volume(pts), denominator_cap));
    }
    return w;
}

}  // namespace ohcp
