#pragma once

#include "bcmaes/types.hpp"

namespace bcmaes::spd {

// Lower-triangular Cholesky factor L with A = L L^T.
// Throws NotPositiveDefinite if the factorization fails.
Matrix cholesky(const Matrix& a);

// Inverse of an SPD matrix via its Cholesky factorization.
Matrix inverse(const Matrix& a);

// log det A computed from the Cholesky factor, 2 * sum log L_ii.
double log_det(const Matrix& a);

// Symmetrize, then clip eigenvalues from below so the result is SPD.
// The floor is scale-relative: floor_rel * (1 + max |eigenvalue|).
// Inputs already at or above the floor are returned symmetrized but
// otherwise untouched, which makes the operation idempotent.
Matrix ensure_spd(const Matrix& a, double floor_rel = 1e-12);

// Smallest eigenvalue of
//   lam*M^-1 + (1-lam)*N^-1 - (lam*M + (1-lam)*N)^-1
// for SPD M, N and lam in [0,1]. Matrix inversion is convex over the
// SPD cone, so the exact value is >= 0; callers check it against a
// small negative tolerance to allow round-off.
double inverse_convexity_gap(const Matrix& m, const Matrix& n, double lam);

}  // namespace bcmaes::spd
