#pragma once

// CSV files. Every file written starts with a comment line
//   # vekua <kind> v<version>: <columns>
// followed by a header row; missing values are empty fields.

#include "vekua/solver.hpp"
#include "vekua/transmutation.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vekua {

inline constexpr int kCsvVersion = 1;

/// xi, a_0..a_N, b_0..b_N at the table nodes.
void write_coefficients_csv(std::ostream& out, const CoefficientTable& table, int order);

/// x, t, re_E, im_E, re_H, im_H; with reference fields also abs_dE, abs_dH.
void write_solution_csv(std::ostream& out, const SolutionField& field,
                        std::span<const Complex> e_ref = {}, std::span<const Complex> h_ref = {});

/// x, t, abs_dE, abs_dH.
void write_errors_csv(std::ostream& out, const SolutionField& field, std::span<const Complex> e_ref,
                      std::span<const Complex> h_ref);

struct CsvTable {
    std::vector<std::string> header;
    /// Empty fields read as NaN.
    std::vector<std::vector<double>> rows;

    std::vector<double> column(std::size_t k) const;
};

/// Reads a numeric CSV, skipping '#' comment lines and an optional header
/// row. Throws ConfigError naming the line of a malformed row.
CsvTable read_csv(std::istream& in, const std::string& source = "csv");
CsvTable read_csv(const std::filesystem::path& path);

} // namespace vekua
