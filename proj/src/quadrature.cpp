#include "vekua/quadrature.hpp"

namespace vekua {

UniformMesh::UniformMesh(double start_, double step_, int count_)
    : start(start_), step(step_), count(count_) {
    if (!(step_ > 0.0)) throw ConfigError("UniformMesh: step must be positive");
    if (count_ < 2) throw ConfigError("UniformMesh: need at least two nodes");
}

UniformMesh UniformMesh::spanning(double a, double b, int count) {
    if (count < 2) throw ConfigError("UniformMesh: need at least two nodes");
    if (!(b > a)) throw ConfigError("UniformMesh: empty interval");
    return {a, (b - a) / (count - 1), count};
}

std::vector<double> UniformMesh::nodes() const {
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k) out[k] = node(k);
    // Pin the last node so spans are reproduced exactly.
    out.back() = end();
    return out;
}

namespace detail {

namespace {

StencilTables build_tables() {
    StencilTables tab;
    for (int m = 0; m < kStencil; ++m) {
        // Expand L_m(u) = prod_{j != m} (u - j) / (m - j) into monomials.
        std::array<long double, kStencil> c{};
        c[0] = 1.0L;
        int degree = 0;
        long double denom = 1.0L;
        for (int j = 0; j < kStencil; ++j) {
            if (j == m) continue;
            for (int p = degree + 1; p >= 1; --p) c[p] = c[p - 1] - j * c[p];
            c[0] = -j * c[0];
            ++degree;
            denom *= static_cast<long double>(m - j);
        }
        tab.poly[m][0] = 0.0;
        for (int p = 0; p < kStencil; ++p)
            tab.poly[m][p + 1] = static_cast<double>(c[p] / denom / (p + 1));
        for (int r = 0; r + 1 < kStencil; ++r) {
            long double lo = 0.0L;
            long double hi = 0.0L;
            for (int p = kStencil - 1; p >= 0; --p) {
                lo = lo * r + c[p] / denom / (p + 1);
                hi = hi * (r + 1) + c[p] / denom / (p + 1);
            }
            lo *= r;
            hi *= (r + 1);
            tab.whole[r][m] = static_cast<double>(hi - lo);
        }
    }
    return tab;
}

} // namespace

const StencilTables& stencil_tables() {
    static const StencilTables tab = build_tables();
    return tab;
}

void require_stencil(int count) {
    if (count < kStencil)
        throw ConfigError("mesh too short: " + std::to_string(count) +
                          " nodes, the six-point rule needs at least 6");
}

} // namespace detail

std::vector<double> composite_weights(int count) {
    detail::require_stencil(count);
    const auto& tab = detail::stencil_tables();
    std::vector<double> w(count, 0.0);
    for (int i = 0; i + 1 < count; ++i) {
        const int s = detail::stencil_start(i, count);
        for (int m = 0; m < detail::kStencil; ++m) w[s + m] += tab.whole[i - s][m];
    }
    return w;
}

} // namespace vekua
