#include "levelcross/generators.hpp"

#include <algorithm>
#include <cmath>

#include "levelcross/discrete_solver.hpp"

namespace levelcross {

CellLabeling random_coloring(const GridShape& shape, int colors, std::uint64_t seed) {
    if (colors < 1) throw InvalidInputError("random_coloring: need at least one color");
    std::mt19937_64 rng(seed);
    CellLabeling out(shape, 1);
    auto flat = out.flat_mutable();
    for (std::int64_t lin = 0; lin < shape.cell_count(); ++lin) {
        flat[lin] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(colors)) + 1;
    }
    return out;
}

CellLabeling random_valid_labeling_walk(const GridShape& shape, int m, std::uint64_t seed) {
    const int n = shape.n;
    const int d = n - 1;
    const auto offsets = detail::neighbor_offsets(n, m);

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(attempt));
        CellLabeling out(shape, d);
        auto flat = out.flat_mutable();
        bool stuck = false;

        std::vector<std::int32_t> idx(n, 1);
        std::int64_t lin = 0;
        CellIndex probe;
        probe.i.resize(n);
        do {
            // Value box imposed by the assigned (smaller-index) neighbors
            // with intersection dimension >= m.
            std::vector<std::int64_t> lo(d, std::numeric_limits<std::int64_t>::min() / 4);
            std::vector<std::int64_t> hi(d, std::numeric_limits<std::int64_t>::max() / 4);
            bool any_neighbor = false;
            for (const auto& off : offsets) {
                bool ok = true;
                for (int s = 0; s < n; ++s) {
                    probe.i[s] = idx[s] + off[s];
                    if (probe.i[s] < 1 || probe.i[s] > shape.k) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                std::int64_t other = 0;
                for (int s = 0; s < n; ++s) other = other * shape.k + (probe.i[s] - 1);
                if (other >= lin) continue;
                any_neighbor = true;
                for (int s = 0; s < d; ++s) {
                    lo[s] = std::max(lo[s], flat[other * d + s] - 1);
                    hi[s] = std::min(hi[s], flat[other * d + s] + 1);
                }
            }
            for (int s = 0; s < d && !stuck; ++s) stuck = lo[s] > hi[s];
            if (stuck) break;

            for (int s = 0; s < d; ++s) {
                if (!any_neighbor) {
                    flat[lin * d + s] = 0;
                } else {
                    const std::uint64_t span = static_cast<std::uint64_t>(hi[s] - lo[s] + 1);
                    flat[lin * d + s] = lo[s] + static_cast<std::int64_t>(rng() % span);
                }
            }
            ++lin;
        } while (detail::advance_index(idx, shape.k));

        if (!stuck && validate_condition(out, m).empty()) return out;
    }
    throw InvalidInputError("random_valid_labeling_walk: generation failed repeatedly");
}

CellLabeling random_valid_labeling_poly(const GridShape& shape, int m, std::uint64_t seed) {
    const int n = shape.n;
    const int d = n - 1;
    std::mt19937_64 rng(seed);
    const auto unit = [&rng]() {  // uniform in [-1, 1], platform independent
        return static_cast<double>(rng() >> 11) * 0x1p-52 * 2.0 - 1.0;
    };

    // Quadratic map with gradient sum <= k per coordinate, so adjacent cell
    // centers (1/k apart per axis) move the value by at most 1.
    struct Quad {
        std::vector<double> lin;
        std::vector<std::vector<double>> mixed;
        double offset;
    };
    std::vector<Quad> polys;
    const double k = static_cast<double>(shape.k);
    for (int c = 0; c < d; ++c) {
        Quad q;
        q.offset = unit() * 3.0;
        q.lin.resize(n);
        q.mixed.assign(n, std::vector<double>(n, 0.0));
        for (int s = 0; s < n; ++s) q.lin[s] = unit();
        for (int s = 0; s < n; ++s) {
            for (int t = s; t < n; ++t) q.mixed[s][t] = unit();
        }
        // |d/dx_s| <= |lin_s| + sum_t |mixed_st| * 2 on I^n; normalize the
        // total derivative budget to k.
        double budget = 0;
        for (int s = 0; s < n; ++s) {
            double g = std::abs(q.lin[s]);
            for (int t = 0; t < n; ++t) g += 2.0 * std::abs(q.mixed[std::min(s, t)][std::max(s, t)]);
            budget += g;
        }
        const double scale = budget > 0 ? k / budget : 1.0;
        for (auto& v : q.lin) v *= scale;
        for (auto& row : q.mixed) {
            for (auto& v : row) v *= scale;
        }
        q.offset *= scale;
        polys.push_back(std::move(q));
    }

    for (int halvings = 0; halvings < 12; ++halvings) {
        CellLabeling out(shape, d);
        auto flat = out.flat_mutable();
        std::vector<std::int32_t> idx(n, 1);
        std::int64_t lin = 0;
        std::vector<double> x(n);
        do {
            for (int s = 0; s < n; ++s) x[s] = (static_cast<double>(idx[s]) - 0.5) / k;
            for (int c = 0; c < d; ++c) {
                const Quad& q = polys[static_cast<std::size_t>(c)];
                double v = q.offset;
                for (int s = 0; s < n; ++s) v += q.lin[s] * x[s];
                for (int s = 0; s < n; ++s) {
                    for (int t = s; t < n; ++t) v += q.mixed[s][t] * x[s] * x[t];
                }
                flat[lin * d + c] = static_cast<std::int64_t>(std::floor(v));
            }
            ++lin;
        } while (detail::advance_index(idx, shape.k));

        if (validate_condition(out, m).empty()) return out;
        for (auto& q : polys) {
            for (auto& v : q.lin) v /= 2.0;
            for (auto& row : q.mixed) {
                for (auto& v : row) v /= 2.0;
            }
        }
    }
    throw InvalidInputError("random_valid_labeling_poly: scaling never converged");
}

}  // namespace levelcross
