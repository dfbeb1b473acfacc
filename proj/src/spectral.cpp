#include "liftcover/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "liftcover/error.hpp"
#include "liftcover/polynomial.hpp"

namespace liftcover {

namespace {

std::vector<double> to_doubles(const SquareMatrix& a) {
  std::vector<double> out(a.size() * a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) out[r * a.size() + c] = a(r, c).convert_to<double>();
  return out;
}

void apply(const std::vector<double>& m, std::size_t n, const std::vector<double>& v,
           std::vector<double>& out) {
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n; ++c) acc += m[r * n + c] * v[c];
    out[r] = acc;
  }
}

double norm2(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

}  // namespace

bool is_nonnegative(const SquareMatrix& a) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a(r, c) < 0) return false;
  return true;
}

bool is_primitive_matrix(const SquareMatrix& a) {
  if (!is_nonnegative(a)) return false;
  const std::size_t n = a.size();
  std::vector<char> pattern(n * n), power(n * n), next(n * n);
  for (std::size_t i = 0; i < n * n; ++i) pattern[i] = a(i / n, i % n) > 0;
  power = pattern;
  const std::size_t limit = (n - 1) * (n - 1) + 1;
  for (std::size_t m = 1; m <= limit; ++m) {
    if (std::all_of(power.begin(), power.end(), [](char x) { return x != 0; })) return true;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        char hit = 0;
        for (std::size_t i = 0; i < n && !hit; ++i) hit = power[r * n + i] && pattern[i * n + c];
        next[r * n + c] = hit;
      }
    std::swap(power, next);
  }
  return false;
}

double spectral_radius(const SquareMatrix& a, const SpectralOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "spectral tolerance must be positive");
  }
  const std::size_t n = a.size();
  const auto m = to_doubles(a);
  const bool nonnegative = is_nonnegative(a);

  // Slightly uneven start so that the iterate is not orthogonal to the
  // dominant eigenvector of a structured matrix.
  std::vector<double> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i + 1) / (4.0 * n);
  const double v0 = norm2(v);
  for (double& x : v) x /= v0;

  double previous = std::numeric_limits<double>::quiet_NaN();
  double previous_step = std::numeric_limits<double>::quiet_NaN();
  for (std::uint64_t it = 0; it < options.max_iterations; ++it) {
    apply(m, n, v, w);
    const double ratio = norm2(w);
    if (ratio == 0.0) return 0.0;

    bool bracketed = false;
    if (nonnegative) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      bracketed = true;
      for (std::size_t i = 0; i < n && bracketed; ++i) {
        bracketed = v[i] > 0.0;
        if (bracketed) {
          lo = std::min(lo, w[i] / v[i]);
          hi = std::max(hi, w[i] / v[i]);
        }
      }
      if (bracketed && hi - lo <= options.tolerance * hi) return 0.5 * (lo + hi);
    }
    if (!bracketed && !std::isnan(previous)) {
      // Geometric tail estimate: with contraction q between steps the
      // remaining error is about step * q / (1 - q).
      const double step = std::abs(ratio - previous);
      double tail = 1.0;
      if (!std::isnan(previous_step) && previous_step > 0.0) {
        const double q = std::min(step / previous_step, 1.0 - 1e-6);
        tail = std::max(1.0, q / (1.0 - q));
      }
      if (step * tail <= options.tolerance * ratio) return ratio;
      previous_step = step;
    }
    previous = ratio;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / ratio;
  }
  throw Error(ErrorCode::NonConvergence,
              "power iteration did not converge within " +
                  std::to_string(options.max_iterations) + " iterations");
}

double largest_real_eigenvalue(const SquareMatrix& a, double tol) {
  const auto root = largest_real_root(char_poly(a), tol);
  if (!root) throw Error(ErrorCode::InvalidArgument, "characteristic polynomial has no real root");
  return *root;
}

}  // namespace liftcover
