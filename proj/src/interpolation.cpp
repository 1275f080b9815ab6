#include "vekua/interpolation.hpp"

namespace vekua {

namespace detail {

bool is_uniform(std::span<const double> nodes) {
    const std::size_t n = nodes.size();
    if (n < 3) return true;
    const double h = (nodes[n - 1] - nodes[0]) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (std::abs((nodes[i + 1] - nodes[i]) - h) > 1e-9 * h) return false;
    return true;
}

void check_increasing(std::span<const double> nodes, const char* who) {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i + 1] > nodes[i]))
            throw ConfigError(std::string(who) + ": nodes not strictly increasing at index " +
                              std::to_string(i));
}

} // namespace detail

LagrangeStencil lagrange_stencil(std::span<const double> nodes, bool uniform, double z) {
    const int n = static_cast<int>(nodes.size());
    if (n < 6) throw ConfigError("lagrange_stencil: need at least six nodes");
    const int i = detail::locate(nodes, uniform, z);
    LagrangeStencil st;
    st.start = std::clamp(i - 2, 0, n - 6);
    for (int m = 0; m < 6; ++m) {
        const double xm = nodes[st.start + m];
        double w = 1.0;
        for (int q = 0; q < 6; ++q) {
            if (q == m) continue;
            const double xq = nodes[st.start + q];
            w *= (z - xq) / (xm - xq);
        }
        st.weights[m] = w;
    }
    return st;
}

} // namespace vekua
