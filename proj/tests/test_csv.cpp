#include "support.hpp"

#include "vekua/csv.hpp"

#include <doctest.h>

#include <sstream>

using namespace vekua;

TEST_CASE("coefficient table round trip") {
    const auto& t = test::exponential().built.table;
    std::stringstream ss;
    write_coefficients_csv(ss, t, 3);
    const std::string text = ss.str();
    CHECK(text.rfind("# vekua coefficients v1: xi,a_0,a_1,a_2,a_3,b_0,b_1,b_2,b_3\n", 0) == 0);
    const CsvTable back = read_csv(ss);
    CHECK(back.header.size() == 9);
    CHECK(back.header[4] == "a_3");
    REQUIRE(back.rows.size() == t.xi_nodes().size());
    for (std::size_t j = 0; j < back.rows.size(); j += 97) {
        CHECK(back.rows[j][0] == t.xi_nodes()[j]);
        CHECK(back.rows[j][2] == t.a(1)[j]);
        CHECK(back.rows[j][8] == t.b(3)[j]);
    }
    CHECK_THROWS_AS(write_coefficients_csv(ss, t, t.computed_order() + 1), ConfigError);
}

TEST_CASE("solution rows with missing points") {
    const auto& s = test::exponential();
    const auto sig = GeneralSignal::sample([](double t) { return test::exponential().oracle.W0(t); }, 0.0, 2.0);
    const auto mesh = XtMesh::uniform(0.0, 3.0, 7, 0.0, 2.0, 6);
    const auto f = solve_general(s.profile, s.built.table, sig, mesh);
    std::stringstream ss;
    write_solution_csv(ss, f);
    const CsvTable back = read_csv(ss);
    CHECK(back.header == std::vector<std::string>{"x", "t", "re_E", "im_E", "re_H", "im_H"});
    REQUIRE(back.rows.size() == 42);
    std::size_t missing = 0;
    for (std::size_t k = 0; k < back.rows.size(); ++k) {
        if (!f.valid[k]) {
            ++missing;
            CHECK(std::isnan(back.rows[k][2]));
        } else {
            CHECK(back.rows[k][2] == f.E[k].real());
            CHECK(back.rows[k][5] == f.H[k].imag());
        }
    }
    CHECK(missing == f.missing().count);
    CHECK(missing > 0);
}

TEST_CASE("error columns") {
    const auto& s = test::exponential();
    const auto mesh = XtMesh::uniform(0.0, 1.0, 6, 0.0, 1.0, 6);
    const auto f = solve_modulated(s.profile, s.built.table, test::exponential_modulated(), mesh);
    std::vector<Complex> e(f.E), h(f.H);
    e[3] += 0.5;
    std::stringstream a, b;
    write_solution_csv(a, f, e, h);
    write_errors_csv(b, f, e, h);
    const auto ta = read_csv(a), tb = read_csv(b);
    CHECK(ta.header.back() == "abs_dH");
    CHECK(tb.header == std::vector<std::string>{"x", "t", "abs_dE", "abs_dH"});
    CHECK(ta.rows[3][6] == doctest::Approx(0.5));
    CHECK(tb.rows[3][2] == doctest::Approx(0.5));
    CHECK(tb.rows[4][2] == 0.0);
    e.pop_back();
    CHECK_THROWS_AS(write_errors_csv(b, f, e, h), ConfigError);
}

TEST_CASE("reader diagnostics") {
    std::istringstream bad("x,y\n1,2\n3,oops\n");
    try {
        read_csv(bad, "in.csv");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("in.csv:3") != std::string::npos);
    }
    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_csv(ragged), ConfigError);
    std::istringstream plain("# comment\n\n1, 2\n3,4\r\n");
    const auto t = read_csv(plain);
    CHECK(t.header.empty());
    CHECK(t.column(1) == std::vector<double>{2.0, 4.0});
    CHECK_THROWS_AS(t.column(2), ConfigError);
}
