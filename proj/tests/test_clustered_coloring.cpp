#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "levelcross/clustered_coloring.hpp"

using namespace levelcross;

namespace {

// Reconstruction oracle written against the displayed matrix, not decode's
// internals: t must equal v + A*u + k*(m,..,m).
bool reconstructs(const LatticePoint& t, const Decode& dec, const ColoringParams& params) {
    const auto a = matrix_a(params);
    const int n = params.n;
    for (int i = 0; i < n; ++i) {
        std::int64_t acc = dec.v.coords[i] + dec.k * params.m;
        for (int j = 0; j < n; ++j) acc += a[i][j] * dec.u.coords[j];
        if (acc != t.coords[i]) return false;
    }
    return true;
}

void walk_box(int n, std::int64_t lo, std::int64_t hi,
              const std::function<void(const LatticePoint&)>& visit) {
    LatticePoint t;
    t.coords.assign(n, lo);
    while (true) {
        visit(t);
        int s = n - 1;
        while (s >= 0 && t.coords[s] == hi) t.coords[s--] = lo;
        if (s < 0) break;
        ++t.coords[s];
    }
}

}  // namespace

TEST_CASE("matrix entries") {
    CHECK(matrix_a(ColoringParams(1, 2)) == std::vector<std::vector<std::int64_t>>{{4}});
    CHECK(matrix_a(ColoringParams(2, 1)) == std::vector<std::vector<std::int64_t>>{{2, 1}, {0, 3}});
    CHECK(matrix_a(ColoringParams(3, 2)) ==
          std::vector<std::vector<std::int64_t>>{{4, 2, 2}, {0, 6, 2}, {0, 0, 8}});
}

TEST_CASE("decode on pinned points") {
    {
        const ColoringParams params(2, 1);
        const Decode dec = decode(LatticePoint{0, 0}, params);
        CHECK(dec.v == LatticePoint{1, 1});
        CHECK(dec.u == LatticePoint{-1, -1});
        CHECK(dec.k == 2);
        CHECK(reconstructs(LatticePoint{0, 0}, dec, params));
    }
    {
        const ColoringParams params(1, 2);
        const Decode at1 = decode(LatticePoint{1}, params);
        CHECK(at1.v == LatticePoint{1});
        CHECK(at1.k == 0);
        CHECK(at1.u == LatticePoint{0});
        const Decode at3 = decode(LatticePoint{3}, params);
        CHECK(at3.v == LatticePoint{1});
        CHECK(at3.k == 1);
        CHECK(at3.u == LatticePoint{0});
    }
}

TEST_CASE("colors over a line, n = 1, m = 2") {
    const ColoringParams params(1, 2);
    const std::int64_t expected[] = {1, 1, 2, 2, 1};
    for (std::int64_t t = 1; t <= 5; ++t) {
        CHECK(color(LatticePoint{t}, params) == expected[t - 1]);
    }
}

TEST_CASE("color equals layer plus one and is 1 on the base box") {
    CHECK(color(LatticePoint{0, 0}, ColoringParams(2, 1)) == 3);
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const ColoringParams params(n, m);
            // every v in V = prod [i*m] has u = 0, k = 0
            walk_box(n, 1, 1, [&](const LatticePoint&) {});
            LatticePoint v;
            v.coords.assign(n, 1);
            bool done = false;
            while (!done) {
                CHECK(color(v, params) == 1);
                int s = n - 1;
                while (s >= 0 && v.coords[s] == static_cast<std::int64_t>(s + 1) * m) {
                    v.coords[s--] = 1;
                }
                if (s < 0) done = true;
                else ++v.coords[s];
            }
        }
    }
}

TEST_CASE("cluster_of on pinned points") {
    {
        const ClusterId id = cluster_of(LatticePoint{0, 0}, ColoringParams(2, 1));
        CHECK(id.k == 2);
        CHECK(id.u == LatticePoint{-1, -1});
    }
    {
        const ColoringParams params(1, 2);
        CHECK(cluster_of(LatticePoint{1}, params) == ClusterId{0, LatticePoint{0}});
        CHECK(cluster_of(LatticePoint{21}, params) == ClusterId{0, LatticePoint{5}});
    }
}

TEST_CASE("cluster enumeration") {
    const LatticeSet line = enumerate_cluster(ClusterId{0, LatticePoint{0}}, ColoringParams(1, 2));
    CHECK(line.points() == std::vector<LatticePoint>{{1}, {2}});

    const LatticeSet plane = enumerate_cluster(ClusterId{0, LatticePoint{0, 0}}, ColoringParams(2, 1));
    CHECK(plane.points() == std::vector<LatticePoint>{{1, 1}, {1, 2}});

    CHECK(cluster_size(ColoringParams(3, 2)) == 48);
    CHECK(enumerate_cluster(ClusterId{1, LatticePoint{2, -1, 0}}, ColoringParams(3, 2)).size() == 48);
}

TEST_CASE("decode partitions a box exactly") {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const ColoringParams params(n, m);
            const std::int64_t lo = n == 3 ? -12 : -30;
            const std::int64_t hi = n == 3 ? 12 : 30;
            walk_box(n, lo, hi, [&](const LatticePoint& t) {
                const Decode dec = decode(t, params);
                REQUIRE(reconstructs(t, dec, params));
                REQUIRE(dec.k >= 0);
                REQUIRE(dec.k <= n);
                for (int i = 1; i <= n; ++i) {
                    REQUIRE(dec.v.coords[i - 1] >= 1);
                    REQUIRE(dec.v.coords[i - 1] <= i * m);
                }
                // membership: the decoded cluster really contains t
                REQUIRE(enumerate_cluster(dec.cluster(), params).contains(t));
            });
        }
    }
}

TEST_CASE("distinct cluster ids give disjoint clusters") {
    for (int n = 1; n <= 2; ++n) {
        for (std::int64_t m = 1; m <= 2; ++m) {
            const ColoringParams params(n, m);
            std::set<ClusterId> ids;
            walk_box(n, -10, 10, [&](const LatticePoint& t) { ids.insert(cluster_of(t, params)); });
            std::map<LatticePoint, ClusterId> owner;
            for (const auto& id : ids) {
                for (const auto& p : enumerate_cluster(id, params).points()) {
                    const auto [it, fresh] = owner.emplace(p, id);
                    CHECK(fresh);
                }
            }
        }
    }
}

TEST_CASE("same-layer clusters are separated by more than m") {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const ColoringParams params(n, m);
            std::map<std::int64_t, std::set<ClusterId>> by_layer;
            walk_box(n, -8, 8, [&](const LatticePoint& t) {
                const ClusterId id = cluster_of(t, params);
                by_layer[id.k].insert(id);
            });
            for (const auto& [layer, ids] : by_layer) {
                std::vector<LatticeSet> sets;
                for (const auto& id : ids) sets.push_back(enumerate_cluster(id, params));
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    for (std::size_t j = i + 1; j < sets.size(); ++j) {
                        std::int64_t best = std::numeric_limits<std::int64_t>::max();
                        for (const auto& p : sets[i].points()) {
                            for (const auto& q : sets[j].points()) {
                                best = std::min(best, linf_distance(p, q));
                            }
                        }
                        CHECK(best >= m + 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("every cluster is 1-connected with exact cardinality") {
    for (int n = 1; n <= 3; ++n) {
        for (std::int64_t m = 1; m <= 3; ++m) {
            const ColoringParams params(n, m);
            std::set<ClusterId> ids;
            walk_box(n, -6, 6, [&](const LatticePoint& t) { ids.insert(cluster_of(t, params)); });
            for (const auto& id : ids) {
                const LatticeSet cluster = enumerate_cluster(id, params);
                CHECK(static_cast<std::int64_t>(cluster.size()) == cluster_size(params));
                CHECK(is_one_connected(cluster));
            }
        }
    }
}

TEST_CASE("exactly n+1 colors appear in a wide box") {
    for (int n = 1; n <= 2; ++n) {
        for (std::int64_t m = 1; m <= 2; ++m) {
            const ColoringParams params(n, m);
            std::int64_t side = (n + 1) * m;
            for (int i = 1; i <= n; ++i) side *= i;
            std::set<std::int64_t> seen;
            walk_box(n, 0, side, [&](const LatticePoint& t) { seen.insert(color(t, params)); });
            CHECK(static_cast<int>(seen.size()) == n + 1);
        }
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ColoringParams(0, 1), InvalidInputError);
    CHECK_THROWS_AS(ColoringParams(1, 0), InvalidInputError);
    CHECK_THROWS_AS(decode(LatticePoint{1, 2, 3}, ColoringParams(2, 1)), InvalidInputError);
    CHECK_THROWS_AS(enumerate_cluster(ClusterId{4, LatticePoint{0, 0}}, ColoringParams(2, 1)),
                    InvalidInputError);
}
