#include "vekua/csv.hpp"

#include "vekua/errors.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace vekua {

namespace {

void preamble(std::ostream& out, const char* kind, const std::vector<std::string>& columns) {
    std::string joined;
    for (const auto& c : columns) joined += (joined.empty() ? "" : ",") + c;
    fmt::print(out, "# vekua {} v{}: {}\n{}\n", kind, kCsvVersion, joined, joined);
}

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

bool parse_number(const std::string& field, double& out) {
    std::size_t b = field.find_first_not_of(" \t");
    if (b == std::string::npos) {
        out = std::numeric_limits<double>::quiet_NaN();
        return true;
    }
    std::size_t e = field.find_last_not_of(" \t");
    const std::string s = field.substr(b, e - b + 1);
    try {
        std::size_t used = 0;
        out = std::stod(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace

void write_coefficients_csv(std::ostream& out, const CoefficientTable& table, int order) {
    if (order < 0 || order > table.computed_order())
        throw ConfigError("coefficients CSV: order outside the table");
    std::vector<std::string> cols{"xi"};
    for (int n = 0; n <= order; ++n) cols.push_back(fmt::format("a_{}", n));
    for (int n = 0; n <= order; ++n) cols.push_back(fmt::format("b_{}", n));
    preamble(out, "coefficients", cols);
    const auto xi = table.xi_nodes();
    std::string line;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        line = num(xi[j]);
        for (int n = 0; n <= order; ++n) line += "," + num(table.a(n)[j]);
        for (int n = 0; n <= order; ++n) line += "," + num(table.b(n)[j]);
        out << line << '\n';
    }
}

void write_solution_csv(std::ostream& out, const SolutionField& field,
                        std::span<const Complex> e_ref, std::span<const Complex> h_ref) {
    const bool with_ref = !e_ref.empty();
    if (with_ref && (e_ref.size() != field.E.size() || h_ref.size() != field.H.size()))
        throw ConfigError("solution CSV: reference size mismatch");
    std::vector<std::string> cols{"x", "t", "re_E", "im_E", "re_H", "im_H"};
    if (with_ref) {
        cols.push_back("abs_dE");
        cols.push_back("abs_dH");
    }
    preamble(out, "solution", cols);
    for (std::size_t ix = 0; ix < field.x.size(); ++ix)
        for (std::size_t it = 0; it < field.t.size(); ++it) {
            const std::size_t id = field.index(ix, it);
            out << num(field.x[ix]) << ',' << num(field.t[it]);
            if (field.valid[id]) {
                out << ',' << num(field.E[id].real()) << ',' << num(field.E[id].imag()) << ','
                    << num(field.H[id].real()) << ',' << num(field.H[id].imag());
                if (with_ref)
                    out << ',' << num(std::abs(field.E[id] - e_ref[id])) << ','
                        << num(std::abs(field.H[id] - h_ref[id]));
            } else {
                out << ",,,,";
                if (with_ref) out << ",,";
            }
            out << '\n';
        }
}

void write_errors_csv(std::ostream& out, const SolutionField& field, std::span<const Complex> e_ref,
                      std::span<const Complex> h_ref) {
    if (e_ref.size() != field.E.size() || h_ref.size() != field.H.size())
        throw ConfigError("errors CSV: reference size mismatch");
    preamble(out, "errors", {"x", "t", "abs_dE", "abs_dH"});
    for (std::size_t ix = 0; ix < field.x.size(); ++ix)
        for (std::size_t it = 0; it < field.t.size(); ++it) {
            const std::size_t id = field.index(ix, it);
            out << num(field.x[ix]) << ',' << num(field.t[it]);
            if (field.valid[id])
                out << ',' << num(std::abs(field.E[id] - e_ref[id])) << ','
                    << num(std::abs(field.H[id] - h_ref[id]));
            else
                out << ",,";
            out << '\n';
        }
}

std::vector<double> CsvTable::column(std::size_t k) const {
    std::vector<double> c;
    c.reserve(rows.size());
    for (const auto& r : rows) {
        if (k >= r.size()) throw ConfigError("CSV: column " + std::to_string(k) + " missing");
        c.push_back(r[k]);
    }
    return c;
}

CsvTable read_csv(std::istream& in, const std::string& source) {
    CsvTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto parts = split(line);
        std::vector<double> row(parts.size());
        bool numeric = true;
        for (std::size_t k = 0; k < parts.size(); ++k)
            if (!parse_number(parts[k], row[k])) numeric = false;
        if (!numeric) {
            if (t.rows.empty() && t.header.empty()) {
                t.header = parts;
                continue;
            }
            throw ConfigError(source + ":" + std::to_string(lineno) + ": non-numeric field");
        }
        if (!t.rows.empty() && row.size() != t.rows.front().size())
            throw ConfigError(source + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(t.rows.front().size()) + " fields");
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    return read_csv(in, path.string());
}

} // namespace vekua
