#pragma once

#include "vekua/oracles.hpp"
#include "vekua/solver.hpp"
#include "vekua/transmutation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vekua::test {

/// eps = (2x + 1)^{-2} on [0, 6] with 5001 x-nodes and an auto-truncated table.
struct ExponentialSetup {
    ExponentialProfileOracle oracle = ExponentialProfileOracle::reference();
    MediumProfile profile =
        MediumProfile::on_x_mesh(oracle.permittivity(), 1.0, UniformMesh::spanning(0.0, 6.0, 5001));
    BuiltTable built = build_coefficient_table(profile);
};

inline const ExponentialSetup& exponential() {
    static const ExponentialSetup s;
    return s;
}

/// eps = (5x + 1)^{-8/5} on a xi-uniform mesh over [0, 3] with 5001 nodes.
inline const MediumProfile& rational_profile() {
    static const MediumProfile p = MediumProfile::on_xi_mesh(rational_permittivity(), 1.0, 3.0, 5001);
    return p;
}

inline ModulatedSignal exponential_modulated() {
    ModulatedSignal s;
    s.omega0 = 0.0;
    s.omega = 1.0;
    s.M = 3;
    s.alpha = {2.0, 2.0, 0.0, 0.0, 0.0, 2.0, 2.0};
    s.beta.assign(7, 0.0);
    return s;
}

struct FieldError {
    double e = 0.0, h = 0.0;
    double max() const { return std::max(e, h); }
};

inline FieldError oracle_error(const SolutionField& f, const ExponentialProfileOracle& o) {
    FieldError err;
    for (std::size_t ix = 0; ix < f.x.size(); ++ix)
        for (std::size_t it = 0; it < f.t.size(); ++it) {
            const std::size_t id = f.index(ix, it);
            if (!f.valid[id]) continue;
            err.e = std::max(err.e, std::abs(f.E[id] - o.E(f.x[ix], f.t[it])));
            err.h = std::max(err.h, std::abs(f.H[id] - o.H(f.x[ix], f.t[it])));
        }
    return err;
}

inline Complex random_complex(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return {u(rng), u(rng)};
}

inline Bicomplex random_bicomplex(std::mt19937_64& rng) {
    return {random_complex(rng), random_complex(rng)};
}

inline double distance(const Bicomplex& a, const Bicomplex& b) {
    return std::abs(a.real_part() - b.real_part()) + std::abs(a.j_part() - b.j_part());
}

} // namespace vekua::test
