#pragma once

// Builds the objects of a run (profile, coefficient table, signal, mesh) from
// a RunConfig and dispatches to the solver routes.

#include "vekua/config.hpp"
#include "vekua/solver.hpp"
#include "vekua/transmutation.hpp"

#include <vector>

namespace vekua {

MediumProfile build_profile(const RunConfig& config);

BuiltTable build_table(const MediumProfile& profile, const RunConfig& config,
                       Execution execution = Execution::parallel);

XtMesh evaluation_mesh(const RunConfig& config);

/// Throws ConfigError unless the signal block is modulated.
ModulatedSignal modulated_signal(const RunConfig& config);

/// W0 as a callable (modulated and expression data) or interpolant (tables).
GeneralSignal::Function signal_function(const RunConfig& config, const MediumProfile& profile);

/// Sampled signal for the quadrature routes. Modulated data without an
/// explicit interval is sampled on the evaluation t-range widened by the
/// largest xi of the mesh, so every point has its domain of dependence.
GeneralSignal general_signal(const RunConfig& config, const MediumProfile& profile,
                             const XtMesh& mesh);

/// `auto` picks modulated for Fourier data and hybrid rearranged otherwise.
Method resolve_method(const RunConfig& config);

SolutionField run_solver(const RunConfig& config, const MediumProfile& profile,
                         const CoefficientTable& table, Method method, const XtMesh& mesh,
                         Execution execution = Execution::parallel);

struct ReferenceFields {
    std::vector<Complex> E, H;
};

/// Oracle values at the points of `field`. Throws ConfigError when the oracle
/// does not apply to the configured medium or signal.
ReferenceFields oracle_fields(const RunConfig& config, const MediumProfile& profile,
                              const SolutionField& field);

} // namespace vekua
