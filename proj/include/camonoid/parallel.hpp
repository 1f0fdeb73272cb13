#pragma once

namespace camonoid {

/// Selects the serial reference kernels or their OpenMP counterparts.
/// Both produce identical results.
enum class Exec { serial, parallel };

/// Thread count used by Exec::parallel kernels; 0 restores the OpenMP
/// default.
void set_threads(int n);
int threads();

}  // namespace camonoid
