#include "support.hpp"

#include <doctest.h>

using namespace vekua;
using test::distance;

namespace {

const GeneralSignal& exponential_signal() {
    static const GeneralSignal s =
        GeneralSignal::sample([](double t) { return test::exponential().oracle.W0(t); }, -2.0, 8.0);
    return s;
}

const XtMesh& small_mesh() {
    static const XtMesh m = XtMesh::uniform(0.0, 6.0, 31, 0.0, 6.0, 21);
    return m;
}

void check_same(const SolutionField& a, const SolutionField& b, double tol) {
    REQUIRE(a.W.size() == b.W.size());
    for (std::size_t k = 0; k < a.W.size(); ++k) {
        REQUIRE(a.valid[k] == b.valid[k]);
        if (!a.valid[k]) continue;
        CHECK(std::abs(a.E[k] - b.E[k]) <= tol);
        CHECK(std::abs(a.H[k] - b.H[k]) <= tol);
    }
}

} // namespace

TEST_CASE("xi = 0 reproduces the initial data") {
    const auto& s = test::exponential();
    const auto f = solve_general(s.profile, s.built.table, exponential_signal(), small_mesh());
    for (std::size_t it = 0; it < f.t.size(); ++it) {
        const std::size_t id = f.index(0, it);
        CHECK(distance(f.W[id], s.oracle.W0(f.t[it])) < 1e-14);
        CHECK(std::abs(f.E[id] - Complex(4 * std::cos(2 * f.t[it]) + 4 * std::cos(3 * f.t[it]))) < 1e-13);
        CHECK(std::abs(f.H[id]) < 1e-13);
    }
}

TEST_CASE("exponential profile: every route matches the closed form") {
    const auto& s = test::exponential();
    const auto direct = solve_general(s.profile, s.built.table, exponential_signal(), small_mesh());
    const auto rearranged = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh());
    const auto modulated = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), small_mesh());
    CHECK(direct.method == Method::direct);
    CHECK(rearranged.method == Method::rearranged);
    CHECK(modulated.method == Method::modulated);
    CHECK(direct.missing().count == 0);
    CHECK(test::oracle_error(direct, s.oracle).max() < 1e-8);
    CHECK(test::oracle_error(rearranged, s.oracle).max() < 1e-8);
    CHECK(test::oracle_error(modulated, s.oracle).max() < 1e-8);
    check_same(direct, modulated, 1e-8);
    check_same(rearranged, modulated, 1e-8);
}

TEST_CASE("routes agree at a low fixed order") {
    const auto& s = test::exponential();
    CoefficientTable t = s.built.table;
    t.truncate(4);
    const auto direct = solve_general(s.profile, t, exponential_signal(), small_mesh());
    const auto rearranged = solve_rearranged(s.profile, t, exponential_signal(), small_mesh());
    const auto modulated = solve_modulated(s.profile, t, test::exponential_modulated(), small_mesh());
    check_same(direct, modulated, 1e-8);
    check_same(rearranged, modulated, 1e-8);
    CHECK(test::oracle_error(modulated, s.oracle).max() > 1e-6);
    const auto via_order = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), small_mesh(), 4);
    check_same(via_order, modulated, 0.0);
    CHECK_THROWS_AS(solve_modulated(s.profile, s.built.table, test::exponential_modulated(), small_mesh(),
                                    s.built.table.computed_order() + 1),
                    ConfigError);
}

TEST_CASE("plain rearranged formula loses accuracy near xi = 0") {
    const auto& s = test::exponential();
    HybridOptions h;
    h.enabled = false;
    h.centering = MomentCentering::origin;
    const auto f = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh(), h);
    CHECK(test::oracle_error(f, s.oracle).max() > 1e-6);
    h.enabled = true;
    const auto g = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh(), h);
    CHECK(test::oracle_error(g, s.oracle).max() < 1e-6);
}

TEST_CASE("hybrid switch") {
    const auto& t = test::exponential().built.table;
    const double sw = auto_xi_switch(t, t.order(), 1e8, 0.16);
    CHECK(sw > 0.0);
    CHECK(sw < 0.1);
    CHECK(auto_xi_switch(t, t.order(), 1e4, 0.16) >= sw);
    const auto& s = test::exponential();
    HybridOptions h;
    h.xi_switch = 0.5;
    h.near_order = 6;
    const auto f = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh(), h);
    CHECK(test::oracle_error(f, s.oracle).max() < 1e-6);
}

TEST_CASE("serial and parallel evaluation are identical") {
    const auto& s = test::exponential();
    SolveOptions serial{Execution::serial, false}, parallel{Execution::parallel, false};
    const auto a = solve_general(s.profile, s.built.table, exponential_signal(), small_mesh(), serial);
    const auto b = solve_general(s.profile, s.built.table, exponential_signal(), small_mesh(), parallel);
    check_same(a, b, 0.0);
    const auto c = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh(), {}, serial);
    const auto d = solve_rearranged(s.profile, s.built.table, exponential_signal(), small_mesh(), {}, parallel);
    check_same(c, d, 0.0);
    const auto e = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), small_mesh(), -1, serial);
    const auto g = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), small_mesh(), -1, parallel);
    check_same(e, g, 0.0);
}

TEST_CASE("domain of dependence") {
    const auto& s = test::exponential();
    const auto sig = GeneralSignal::sample([](double t) { return test::exponential().oracle.W0(t); }, 0.0, 6.0);
    const auto f = solve_general(s.profile, s.built.table, sig, small_mesh());
    const auto m = f.missing();
    CHECK(m.count > 0);
    CHECK(m.x_min > 0.0);
    CHECK(m.t_min == 0.0);
    CHECK(m.t_max == 6.0);
    for (std::size_t ix = 0; ix < f.x.size(); ++ix)
        for (std::size_t it = 0; it < f.t.size(); ++it) {
            const bool inside = f.t[it] - f.xi[ix] >= -1e-12 && f.t[it] + f.xi[ix] <= 6.0 + 1e-12;
            CHECK(static_cast<bool>(f.valid[f.index(ix, it)]) == inside);
        }
    const auto r = solve_rearranged(s.profile, s.built.table, sig, small_mesh());
    CHECK(r.missing().count == m.count);
    CHECK(test::oracle_error(r, s.oracle).max() < 1e-6);
    CHECK_THROWS_AS(solve_general(s.profile, s.built.table, sig, small_mesh(), {Execution::parallel, true}),
                    NumericalError);
    CHECK_THROWS_AS(solve_rearranged(s.profile, s.built.table, sig, small_mesh(), {}, {Execution::serial, true}),
                    NumericalError);
}

TEST_CASE("homogeneous medium reduces to d'Alembert") {
    const auto p = MediumProfile::on_x_mesh([](double) { return 4.0; }, 1.0, UniformMesh::spanning(0, 3, 601));
    const auto built = build_coefficient_table(p);
    auto w0 = [](double t) {
        return Bicomplex{Complex(std::exp(-(t - 1) * (t - 1)), 0.0), Complex(0.0, 0.5 * std::sin(t))};
    };
    const auto sig = GeneralSignal::sample(w0, -7.0, 13.0);
    const XtMesh mesh = XtMesh::uniform(0.0, 3.0, 41, 0.0, 6.0, 41);
    for (const auto& f : {solve_general(p, built.table, sig, mesh), solve_rearranged(p, built.table, sig, mesh)})
        for (std::size_t ix = 0; ix < f.x.size(); ++ix)
            for (std::size_t it = 0; it < f.t.size(); ++it)
                CHECK(distance(f.W[f.index(ix, it)], oracle_dalembert(w0, 2.0 * f.x[ix], f.t[it])) < 1e-12);
}

TEST_CASE("physical fields round trip") {
    const auto& p = test::exponential().profile;
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const Bicomplex w = test::random_bicomplex(rng);
        const double x = 0.1 * k;
        const auto [e, h] = to_physical(w, x, p);
        CHECK(distance(from_physical(e, h, x, p), w) < 1e-12);
    }
}

TEST_CASE("Maxwell residual of a computed field") {
    const auto& s = test::exponential();
    const double h = 1e-3;
    const XtMesh mesh = XtMesh::uniform(2.0 - h, 2.0 + h, 3, 1.5 - h, 1.5 + h, 3);
    const auto f = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), mesh);
    const Complex i(0.0, 1.0);
    const double eps = s.profile.epsilon(2.0);
    const Complex dtE = (f.E[f.index(1, 2)] - f.E[f.index(1, 0)]) / (2 * h);
    const Complex dxE = (f.E[f.index(2, 1)] - f.E[f.index(0, 1)]) / (2 * h);
    const Complex dtH = (f.H[f.index(1, 2)] - f.H[f.index(1, 0)]) / (2 * h);
    const Complex dxH = (f.H[f.index(2, 1)] - f.H[f.index(0, 1)]) / (2 * h);
    CHECK(std::abs(eps * dtE - i * dxH) < 1e-4);
    CHECK(std::abs(i * dxE + dtH) < 1e-4);
}

TEST_CASE("evaluation mesh") {
    const auto m = XtMesh::uniform(0.0, 6.0, 201, 0.0, 6.0, 101);
    CHECK(m.size() == 20301);
    CHECK(m.x.back() == 6.0);
    CHECK(m.t[50] == doctest::Approx(3.0));
}
