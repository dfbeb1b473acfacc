#pragma once

#include <cstdint>

#include "liftcover/matrix.hpp"

namespace liftcover {

struct SpectralOptions {
  double tolerance = 1e-9;
  std::uint64_t max_iterations = 1'000'000;
};

/// Modulus of the dominant eigenvalue by power iteration.
///
/// For a nonnegative matrix the iterate stays positive and the iteration stops
/// once the Collatz-Wielandt bracket min_i (Av)_i/v_i <= rho <= max_i (Av)_i/v_i
/// is narrower than `tolerance` relative to rho. Otherwise the iteration stops
/// once the change of the norm ratio, inflated by the geometric tail factor
/// q/(1-q) of the observed contraction q, is below `tolerance` relative to the
/// ratio. Throws NonConvergence when the cap is reached first.
double spectral_radius(const SquareMatrix& a, const SpectralOptions& options = {});

/// Largest real root of char_poly(a), isolated exactly. For a nonnegative
/// matrix this is the Perron root. Throws InvalidArgument when the
/// characteristic polynomial has no real root.
double largest_real_eigenvalue(const SquareMatrix& a, double tol = 1e-12);

bool is_nonnegative(const SquareMatrix& a);

/// True when some power A^m with m <= (n-1)^2 + 1 is entrywise positive
/// (Wielandt's bound); tests the zero pattern only.
bool is_primitive_matrix(const SquareMatrix& a);

}  // namespace liftcover
