#pragma once

namespace vekua {

/// Loop policy for the data-parallel kernels. `serial` is the reference path
/// the tests compare the OpenMP path against.
enum class Execution { serial, parallel };

/// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int max_threads();

/// Sets the OpenMP thread count; 0 keeps the runtime default.
void set_threads(int n);

} // namespace vekua
