#pragma once

// Central numerical tolerances. Tests and library code share these so a
// tolerance change happens in exactly one place.

namespace rqi {

inline constexpr double PI = 3.141592653589793238462643383279502884;

// Eigenvalues of reduced density matrices below this magnitude are treated as
// zero (0*log 0 handling, Schmidt-rank counting, PPT verdicts).
inline constexpr double EPS_EIG = 1e-10;

// Hermiticity check threshold: max |A - A^dagger| entrywise.
inline constexpr double EPS_HERM = 1e-12;

// Agreement demanded between numerical routes and closed-form expressions.
inline constexpr double EPS_ORACLE = 1e-9;

// Jacobi eigensolver: stop when the off-diagonal Frobenius norm drops below
// this, or after the sweep cap.
inline constexpr double JACOBI_OFF_TOL = 1e-13;
inline constexpr int JACOBI_MAX_SWEEPS = 100;

} // namespace rqi
