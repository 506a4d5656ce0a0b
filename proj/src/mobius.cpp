#include "ohcp/errors.hpp"
#include "ohcp/unimodularity.hpp"

#include <algorithm>

namespace ohcp {
namespace {

class CycleSearch {
public:
    CycleSearch(const IntMatrix& b, const std::function<bool(const CycleComplexWitness&)>& visit,
                std::uint64_t budget, std::size_t max_length)
        : b_(b), n_(b.cols()), visit_(visit), budget_(budget),
          max_length_(max_length == 0 ? b.cols() : max_length),
          shared_count_(n_ * n_, 0), shared_row_(n_ * n_, 0), adj_(n_) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < n_; ++j)
                if (b(i, j) != 0) cols.push_back(j);
            for (std::size_t x = 0; x < cols.size(); ++x)
                for (std::size_t y = x + 1; y < cols.size(); ++y) {
                    note_shared(cols[x], cols[y], i);
                    note_shared(cols[y], cols[x], i);
                }
        }
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t w = 0; w < n_; ++w)
                if (count(u, w) > 0) adj_[u].push_back(w);
    }

    void run() {
        two_cycles();
        for (std::size_t s = 0; s < n_ && !stop_; ++s) {
            path_.assign(1, s);
            on_path_.assign(n_, false);
            on_path_[s] = true;
            extend();
        }
    }

private:
    std::size_t count(std::size_t u, std::size_t w) const { return shared_count_[u * n_ + w]; }

    void note_shared(std::size_t u, std::size_t w, std::size_t row) {
        auto& c = shared_count_[u * n_ + w];
        if (c == 0) shared_row_[u * n_ + w] = row;
        // Second shared row is only needed for 2-cycles, recorded separately.
        if (c == 1) second_row_.push_back({u, w, row});
        if (c < 255) ++c;
    }

    // Two columns sharing exactly two rows; impossible in a simplicial
    // complex but meaningful for raw matrices.
    void two_cycles() {
        for (const auto& [u, w, row] : second_row_) {
            if (stop_ || u >= w || count(u, w) != 2) continue;
            emit({u, w}, {shared_row_[u * n_ + w], row});
        }
    }

    void extend() {
        const std::size_t v = path_.back();
        const std::size_t s = path_.front();
        for (std::size_t w : adj_[v]) {
            if (stop_) return;
            if (w <= s || on_path_[w]) continue;
            if (++steps_ > budget_)
                throw UndecidedError("cycle-complex search exceeded its budget of " + std::to_string(budget_) +
                                     " steps");
            bool chord = false, closes = false;
            for (std::size_t t = 0; t + 1 < path_.size(); ++t) {
                if (count(path_[t], w) == 0) continue;
                if (t == 0)
                    closes = true;
                else
                    chord = true;
            }
            if (chord) continue;
            if (closes) {
                if (path_[1] < w) {
                    auto cycle = path_;
                    cycle.push_back(w);
                    try_cycle(cycle);
                }
                continue;
            }
            if (path_.size() + 2 > max_length_) continue;
            path_.push_back(w);
            on_path_[w] = true;
            extend();
            on_path_[w] = false;
            path_.pop_back();
        }
    }

    void try_cycle(const std::vector<std::size_t>& cycle) {
        const std::size_t k = cycle.size();
        std::vector<std::size_t> faces(k);
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t a = cycle[i], c = cycle[(i + 1) % k];
            if (count(a, c) != 1) return;
            faces[i] = shared_row_[a * n_ + c];
        }
        auto sorted = faces;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
        emit(cycle, faces);
    }

    void emit(const std::vector<std::size_t>& cycle, const std::vector<std::size_t>& faces) {
        const std::size_t k = cycle.size();
        for (std::size_t i = 0; i < k; ++i)
            if (abs(b_(faces[i], cycle[i])) != 1 || abs(b_(faces[i], cycle[(i + 1) % k])) != 1) return;
        // Propagate an orientation along the cycle and test the closing face.
        int eps = 1;
        for (std::size_t i = 0; i + 1 < k; ++i)
            eps = -eps * sgn(b_(faces[i], cycle[i])) * sgn(b_(faces[i], cycle[i + 1]));
        const int closing = eps * sgn(b_(faces[k - 1], cycle[k - 1])) + sgn(b_(faces[k - 1], cycle[0]));
        CycleComplexWitness w{cycle, faces, closing == 0};
        if (!visit_(w)) stop_ = true;
    }

    struct Extra {
        std::size_t u, w, row;
    };

    const IntMatrix& b_;
    std::size_t n_;
    const std::function<bool(const CycleComplexWitness&)>& visit_;
    std::uint64_t budget_;
    std::size_t max_length_;
    std::vector<std::uint8_t> shared_count_;
    std::vector<std::size_t> shared_row_;
    std::vector<Extra> second_row_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> path_;
    std::vector<bool> on_path_;
    std::uint64_t steps_ = 0;
    bool stop_ = false;
};

}  // namespace

void enumerate_cycle_complexes(const IntMatrix& boundary,
                               const std::function<bool(const CycleComplexWitness&)>& visit,
                               std::uint64_t budget, std::size_t max_length) {
    CycleSearch(boundary, visit, budget, max_length).run();
}

std::optional<CycleComplexWitness> find_mobius_subcomplex(const IntMatrix& boundary, const TUOptions& opts) {
    std::optional<CycleComplexWitness> found;
    enumerate_cycle_complexes(
        boundary,
        [&](const CycleComplexWitness& w) {
            if (w.orientable) return true;
            found = w;
            return false;
        },
        opts.mobius_budget, opts.max_cycle_length);
    return found;
}

std::optional<CycleComplexWitness> find_mobius_subcomplex(const SimplicialComplex& k, int q,
                                                          const TUOptions& opts) {
    return find_mobius_subcomplex(boundary_matrix(k, q), opts);
}

}  // namespace ohcp
