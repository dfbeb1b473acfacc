#include "liftcover/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liftcover/error.hpp"

namespace liftcover {

namespace {

using boost::multiprecision::abs;

BigInt content(const ExactPolynomial& p) {
  BigInt g = 0;
  for (const BigInt& c : p.coefficients()) g = boost::multiprecision::gcd(g, c);
  return g;
}

ExactPolynomial primitive_part(const ExactPolynomial& p) {
  const BigInt g = content(p);
  if (g <= 1) return p;
  std::vector<BigInt> out = p.coefficients();
  for (BigInt& c : out) c /= g;
  return ExactPolynomial(std::move(out));
}

/// Remainder of a modulo b scaled by a positive constant, so that its sign
/// pattern matches the true remainder.
ExactPolynomial positive_pseudo_remainder(ExactPolynomial a, const ExactPolynomial& b) {
  const BigInt lb = b.leading();
  const BigInt scale_by = abs(lb);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const BigInt la = a.leading();
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    // |lb| * a - sign(lb) * la * x^shift * b
    std::vector<BigInt> next = a.coefficients();
    for (BigInt& c : next) c *= scale_by;
    const BigInt factor = lb > 0 ? la : BigInt(-la);
    for (std::size_t i = 0; i < b.coefficients().size(); ++i)
      next[i + shift] -= factor * b.coefficients()[i];
    a = ExactPolynomial(std::move(next));
  }
  return a;
}

std::vector<ExactPolynomial> sturm_chain(const ExactPolynomial& p) {
  std::vector<ExactPolynomial> chain{primitive_part(p), primitive_part(p.derivative())};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    ExactPolynomial r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_changes(const std::vector<ExactPolynomial>& chain, const BigInt& num,
                 unsigned shift) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.sign_at_dyadic(num, shift);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sign_changes_at_infinity(const std::vector<ExactPolynomial>& chain) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = q.leading() > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

ExactPolynomial::ExactPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

ExactPolynomial ExactPolynomial::monomial(std::size_t degree, const BigInt& coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = coefficient;
  return ExactPolynomial(std::move(c));
}

void ExactPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt ExactPolynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : BigInt(0);
}

const BigInt& ExactPolynomial::leading() const {
  if (coefficients_.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
  return coefficients_.back();
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<BigInt> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) out[i - 1] = coefficients_[i] * i;
  return ExactPolynomial(std::move(out));
}

int ExactPolynomial::sign_at_dyadic(const BigInt& numerator, unsigned shift) const {
  if (coefficients_.empty()) return 0;
  // 2^(shift * deg) p(num / 2^shift) = sum c_i num^i 2^(shift (deg - i)), by Horner.
  BigInt acc = 0;
  const BigInt denom = BigInt(1) << shift;
  BigInt denom_power = 1;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    acc = acc * numerator + coefficients_[i] * denom_power;
    denom_power *= denom;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

double ExactPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    acc = acc * x + coefficients_[i].convert_to<double>();
  return acc;
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a + (-b);
}

ExactPolynomial ExactPolynomial::operator-() const {
  std::vector<BigInt> out = coefficients_;
  for (BigInt& c : out) c = -c;
  return ExactPolynomial(std::move(out));
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return ExactPolynomial(std::move(out));
}

ExactPolynomial exact_divide(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error(ErrorCode::Defect, "inexact polynomial division");
  std::vector<BigInt> rem = a.coefficients();
  const std::size_t qdeg = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<BigInt> quot(qdeg + 1);
  const BigInt& lb = b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t step = qdeg + 1; step-- > 0;) {
    const BigInt& top = rem[step + bc.size() - 1];
    if (top % lb != 0) throw Error(ErrorCode::Defect, "inexact polynomial division");
    const BigInt q = top / lb;
    quot[step] = q;
    if (q == 0) continue;
    for (std::size_t i = 0; i < bc.size(); ++i) rem[step + i] -= q * bc[i];
  }
  if (!ExactPolynomial(std::move(rem)).is_zero()) {
    throw Error(ErrorCode::Defect, "inexact polynomial division");
  }
  return ExactPolynomial(std::move(quot));
}

ExactPolynomial char_poly(const SquareMatrix& a) {
  const std::size_t n = a.size();
  std::vector<ExactPolynomial> m(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m[r * n + c] = r == c ? ExactPolynomial(std::vector<BigInt>{BigInt(-a(r, c)), BigInt(1)})
                            : ExactPolynomial(std::vector<BigInt>{BigInt(-a(r, c))});
    }
  }
  ExactPolynomial previous_pivot{1};
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const ExactPolynomial pivot = m[p * n + p];
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        ExactPolynomial num = pivot * m[r * n + c] - m[r * n + p] * m[p * n + c];
        m[r * n + c] = exact_divide(num, previous_pivot);
      }
    }
    previous_pivot = pivot;
  }
  return m[n * n - 1];
}

std::optional<double> largest_real_root(const ExactPolynomial& p, double tol) {
  if (p.degree() < 1) return std::nullopt;
  const auto chain = sturm_chain(p);
  const int at_infinity = sign_changes_at_infinity(chain);

  // Cauchy bound: every root satisfies |x| < 1 + max |c_i / c_n|.
  BigInt bound = 1;
  const BigInt lead = abs(p.leading());
  for (const BigInt& c : p.coefficients()) {
    BigInt q = abs(c) / lead + 1;
    if (q > bound) bound = q;
  }
  bound += 1;

  // Distinct real roots strictly above num / 2^shift.
  auto roots_above = [&](const BigInt& num, unsigned shift) {
    return sign_changes(chain, num, shift) - at_infinity;
  };

  unsigned shift = 0;
  BigInt lo = -bound;
  BigInt hi = bound;
  if (roots_above(lo, shift) == 0) return std::nullopt;

  const double width_goal = std::max(tol, 1e-300);
  while (std::ldexp((hi - lo).convert_to<double>(), -static_cast<int>(shift)) > width_goal &&
         shift < 2000) {
    lo <<= 1;
    hi <<= 1;
    ++shift;
    BigInt mid = (lo + hi) / 2;
    if (p.sign_at_dyadic(mid, shift) == 0) {
      // mid is itself a root; keep it inside (lo, hi] when it is the largest.
      if (roots_above(mid, shift) == 0) {
        return std::ldexp(mid.convert_to<double>(), -static_cast<int>(shift));
      }
      lo = mid;
      continue;
    }
    if (roots_above(mid, shift) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const BigInt mid2 = lo + hi;
  return std::ldexp(mid2.convert_to<double>(), -static_cast<int>(shift) - 1);
}

std::string to_string(const ExactPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.coefficients().size(); i-- > 0;) {
    const BigInt& c = p.coefficients()[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace liftcover
