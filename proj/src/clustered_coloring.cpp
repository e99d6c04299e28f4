#include "levelcross/clustered_coloring.hpp"

#include <array>

namespace levelcross {

namespace {

// Nonnegative mathematical remainder; b > 0.
std::int64_t pos_mod(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
    detail::internal_check(a % b == 0, what);
    return a / b;
}

constexpr int kMaxStackDim = 16;

// Shared recurrence core writing v, u, k into caller buffers of length n.
void decode_into(std::span<const std::int64_t> t, const ColoringParams& params,
                 std::int64_t* v, std::int64_t* u, std::int64_t& k) {
    const int n = params.n;
    const std::int64_t m = params.m;
    if (static_cast<int>(t.size()) != n) throw InvalidInputError("decode: point dimension != n");

    v[0] = pos_mod(t[0] - 1, m) + 1;
    for (int i = 2; i <= n; ++i) {
        const std::int64_t im = static_cast<std::int64_t>(i) * m;
        v[i - 1] = pos_mod(pos_mod(t[i - 1] - t[i - 2], im) + v[i - 2] - 1, im) + 1;
    }

    const std::int64_t q = exact_div(t[n - 1] - v[n - 1], m, "decode: m must divide t_n - v_n");
    k = pos_mod(q, n + 1);
    u[n - 1] = exact_div(q - k, n + 1, "decode: n+1 must divide (t_n - v_n)/m - k");
    for (int i = n; i >= 2; --i) {
        const std::int64_t im = static_cast<std::int64_t>(i) * m;
        const std::int64_t diff = t[i - 1] - t[i - 2] - (v[i - 1] - v[i - 2]);
        u[i - 2] = u[i - 1] - exact_div(diff, im, "decode: i*m must divide the step difference");
    }

    // Reconstruction t = v + A*u + k*(m,..,m); exactness above plus this
    // identity is the full runtime proof obligation.
    for (int i = 1; i <= n; ++i) {
        std::int64_t au = static_cast<std::int64_t>(i + 1) * m * u[i - 1];
        for (int j = i + 1; j <= n; ++j) au += m * u[j - 1];
        detail::internal_check(v[i - 1] + au + k * m == t[i - 1],
                               "decode: reconstruction identity failed");
    }
}

}  // namespace

std::vector<std::vector<std::int64_t>> matrix_a(const ColoringParams& params) {
    const int n = params.n;
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) {
                a[i - 1][j - 1] = static_cast<std::int64_t>(i + 1) * params.m;
            } else if (i < j) {
                a[i - 1][j - 1] = params.m;
            }
        }
    }
    return a;
}

Decode decode(const LatticePoint& t, const ColoringParams& params) {
    Decode d;
    d.v.coords.resize(params.n);
    d.u.coords.resize(params.n);
    decode_into(t.coords, params, d.v.coords.data(), d.u.coords.data(), d.k);
    return d;
}

std::int64_t color(std::span<const std::int64_t> t, const ColoringParams& params) {
    const int n = params.n;
    if (n <= kMaxStackDim) {
        std::array<std::int64_t, kMaxStackDim> v{}, u{};
        std::int64_t k = 0;
        decode_into(t, params, v.data(), u.data(), k);
        return k + 1;
    }
    std::vector<std::int64_t> v(n), u(n);
    std::int64_t k = 0;
    decode_into(t, params, v.data(), u.data(), k);
    return k + 1;
}

std::int64_t color(const LatticePoint& t, const ColoringParams& params) {
    return color(std::span<const std::int64_t>(t.coords), params);
}

ClusterId cluster_of(const LatticePoint& t, const ColoringParams& params) {
    return decode(t, params).cluster();
}

std::int64_t cluster_size(const ColoringParams& params) {
    std::int64_t size = 1;
    for (int i = 1; i <= params.n; ++i) size *= static_cast<std::int64_t>(i) * params.m;
    return size;
}

LatticeSet enumerate_cluster(const ClusterId& id, const ColoringParams& params) {
    const int n = params.n;
    const std::int64_t m = params.m;
    if (id.k < 0 || id.k > n) throw InvalidInputError("enumerate_cluster: k out of range 0..n");
    if (id.u.dim() != n) throw InvalidInputError("enumerate_cluster: u dimension != n");

    // Base corner A*u + k*(m,..,m); the cluster is that plus the box V.
    std::vector<std::int64_t> base(n);
    for (int i = 1; i <= n; ++i) {
        std::int64_t au = static_cast<std::int64_t>(i + 1) * m * id.u.coords[i - 1];
        for (int j = i + 1; j <= n; ++j) au += m * id.u.coords[j - 1];
        base[i - 1] = au + id.k * m;
    }

    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(cluster_size(params)));
    std::vector<std::int64_t> v(n, 1);
    while (true) {
        LatticePoint p;
        p.coords.resize(n);
        for (int i = 0; i < n; ++i) p.coords[i] = base[i] + v[i];
        pts.push_back(std::move(p));

        int i = n - 1;
        while (i >= 0 && v[i] == static_cast<std::int64_t>(i + 1) * m) v[i--] = 1;
        if (i < 0) break;
        ++v[i];
    }
    LatticeSet out = LatticeSet::from_points(std::move(pts));
    detail::internal_check(static_cast<std::int64_t>(out.size()) == cluster_size(params),
                           "enumerate_cluster: cardinality != n! * m^n");
    return out;
}

}  // namespace levelcross
