#pragma once

// Solution of the initial problem W(0, t) = W0(t) in the travel-time variable,
// by the direct Legendre-kernel quadrature, by the rearranged moment formula,
// or by the closed Neumann series of spherical Bessel functions for Fourier
// data; plus the conversion of W to the physical fields E, H.

#include "vekua/bicomplex.hpp"
#include "vekua/execution.hpp"
#include "vekua/medium.hpp"
#include "vekua/signal.hpp"
#include "vekua/transmutation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vekua {

enum class Method { direct, rearranged, modulated };

std::string_view method_name(Method m);

/// Tensor-product evaluation mesh.
struct XtMesh {
    std::vector<double> x;
    std::vector<double> t;

    static XtMesh uniform(double x0, double x1, int nx, double t0, double t1, int nt);
    std::size_t size() const { return x.size() * t.size(); }
};

/// Bounding box of the points left unevaluated.
struct MissingReport {
    std::size_t count = 0;
    double x_min = 0.0, x_max = 0.0, t_min = 0.0, t_max = 0.0;
};

/// Values on an XtMesh, x-major: point (ix, it) lives at ix * nt + it.
struct SolutionField {
    std::vector<double> x, t;
    /// xi(x) per row.
    std::vector<double> xi;
    std::vector<Bicomplex> W;
    std::vector<Complex> E, H;
    /// 0 where the domain of dependence leaves the signal interval.
    std::vector<unsigned char> valid;
    Method method = Method::direct;
    int order = 0;

    std::size_t index(std::size_t ix, std::size_t it) const { return ix * t.size() + it; }
    MissingReport missing() const;
};

struct SolveOptions {
    Execution execution = Execution::parallel;
    /// Turn domain-of-dependence violations into a NumericalError.
    bool strict = false;
};

/// Where the moments int z^l W0+-(z) dz of the rearranged formula are centered:
/// on a row of centers next to each t (`local`), or at z = 0 as in the plain
/// formula (`origin`), which loses accuracy near xi = 0.
enum class MomentCentering { local, origin };

struct HybridOptions {
    bool enabled = true;
    /// Rows with xi below this use the direct formula; empty selects it from
    /// the coefficient growth (see auto_xi_switch).
    std::optional<double> xi_switch;
    /// Truncation order used below xi_switch, if smaller than the table's.
    std::optional<int> near_order;
    /// Bound on the magnitude of the terms recombined per point, relative to
    /// |W0|; rows above it go to the direct formula.
    double growth_limit = 1e8;
    /// Distance between moment centers; 0 picks max xi / 8.
    double center_spacing = 0.0;
    MomentCentering centering = MomentCentering::local;
};

/// Smallest table node above which the rearranged recombination, with moments
/// centered within spacing/2 of t, sums terms no larger than `limit` |W0|.
double auto_xi_switch(const CoefficientTable& table, int order, double limit, double spacing);

SolutionField solve_general(const MediumProfile& profile, const CoefficientTable& table,
                            const GeneralSignal& signal, const XtMesh& mesh,
                            const SolveOptions& options = {});

SolutionField solve_rearranged(const MediumProfile& profile, const CoefficientTable& table,
                               const GeneralSignal& signal, const XtMesh& mesh,
                               const HybridOptions& hybrid = {},
                               const SolveOptions& options = {});

/// order < 0 uses table.order(); otherwise order <= table.computed_order().
SolutionField solve_modulated(const MediumProfile& profile, const CoefficientTable& table,
                              const ModulatedSignal& signal, const XtMesh& mesh, int order = -1,
                              const SolveOptions& options = {});

/// (E, H) = (R(W) / sqrt(c eps), -i I(W) / sqrt(c mu)) at abscissa x.
std::pair<Complex, Complex> to_physical(const Bicomplex& w, double x, const MediumProfile& p);

/// Inverse of to_physical.
Bicomplex from_physical(Complex e, Complex h, double x, const MediumProfile& p);

/// Fills E and H of a field from its W values.
void to_physical(SolutionField& field, const MediumProfile& p);

} // namespace vekua
