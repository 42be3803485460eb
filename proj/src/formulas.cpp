#include "ap3/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace ap3 {

namespace {

std::uint64_t to_u64(const Rational& v, const char* what) {
  if (!v.is_integer() || v.sign() < 0 || !v.numerator().fits_ulong_p()) {
    throw std::runtime_error(std::string(what) + " did not evaluate to a machine nonnegative integer: " +
                             v.str());
  }
  return v.numerator().get_ui();
}

}  // namespace

const char* prediction_kind_name(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::ExactMaximum: return "exact-maximum";
    case PredictionKind::LowerBoundWitness: return "lower-bound-witness";
    case PredictionKind::UpperBound: return "upper-bound";
  }
  return "?";
}

Prediction mu_line(std::uint64_t n) {
  return {(n * n + 1) / 2, PredictionKind::ExactMaximum, "line-max"};
}

Prediction mu_circle(std::uint64_t n) {
  if (n < 2) return {n, PredictionKind::ExactMaximum, "circle-max"};
  // Two circle points admit only constant triples; from n = 3 on the value
  // is n^2/2 plus a residue by n mod 4.
  if (n == 2) return {2, PredictionKind::ExactMaximum, "circle-max"};
  std::uint64_t value = 0;
  switch (n % 4) {
    case 0: value = n * n / 2 + n; break;
    case 1: value = (n * n + n) / 2; break;
    case 2: value = n * n / 2 + 2; break;
    default: value = (n * n + n) / 2 - 1; break;
  }
  return {value, PredictionKind::ExactMaximum, "circle-max"};
}

Prediction mu_equator(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("equator maximum defined for n >= 2");
  std::uint64_t value = 0;
  switch (n % 4) {
    case 0: value = n * n / 2 + 2 * n - 4; break;
    case 1: value = (n * n + 5 * n) / 2 - 8; break;
    case 2: value = n * n / 2 + 3 * n - 6; break;
    default: value = (n * n + 5 * n) / 2 - 7; break;
  }
  return {value, PredictionKind::ExactMaximum, "equator-max"};
}

Prediction unique_midpoint_cap(std::uint64_t n) {
  if (n == 0) return {0, PredictionKind::UpperBound, "unique-midpoint-cap"};
  return {n * n - 2 * n + 2, PredictionKind::UpperBound, "unique-midpoint-cap"};
}

Prediction circle_cap_general(std::uint64_t n) {
  return {n * (n / 2) + n, PredictionKind::UpperBound, "circle-cap"};
}

Prediction circle_cap_mod2(std::uint64_t n) {
  if (n % 4 != 2) throw std::invalid_argument("this circle cap applies only when n mod 4 = 2");
  return {n * n / 2 + 2, PredictionKind::UpperBound, "circle-cap-mod2"};
}

Prediction general_cap(std::uint64_t n) {
  const std::uint64_t lo = (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t hi = n > 0 ? n - 1 - lo : 0;
  const Rational inner = Rational(static_cast<long long>(n), 2) *
                         Rational(static_cast<long long>(lo)) *
                         Rational(static_cast<long long>(hi));
  const Rational value = Rational(2) * Rational(inner.floor()) +
                         Rational(static_cast<long long>(n));
  return {to_u64(value, "general cap"), PredictionKind::UpperBound, "distance-partition-cap"};
}

Prediction bipartite_exact(std::uint64_t nl, std::uint64_t nr) {
  const std::uint64_t n = nl + nr;
  const std::uint64_t value = n >= 2 ? (n - 2) * nl * nr + n : n;
  return {value, PredictionKind::ExactMaximum, "bipartite-exact"};
}

std::uint64_t tree_ball_size(int degree, int d0) {
  if (degree < 2 || d0 < 0) throw std::invalid_argument("tree ball size needs r >= 2, d0 >= 0");
  std::uint64_t size = 1;
  std::uint64_t shell = degree;
  for (int d = 1; d <= d0; ++d) {
    size += shell;
    shell *= static_cast<std::uint64_t>(degree - 1);
  }
  return size;
}

Prediction tree_ball_exact(int degree, int d0) {
  if (degree < 2 || d0 < 0) throw std::invalid_argument("tree ball count needs r >= 2, d0 >= 0");
  if (degree == 2) {
    Prediction p = mu_line(static_cast<std::uint64_t>(2 * d0 + 1));
    return {p.value, PredictionKind::LowerBoundWitness, "tree-ball-exact"};
  }
  const long long r = degree;
  const Rational size(static_cast<long long>(tree_ball_size(degree, d0)));
  const Rational quad = Rational(r * r + (r - 2) * (r - 2), 2 * r * r);
  const Rational lin = Rational(2 * (r - 2), r * r);
  const Rational constant = Rational(2, r * r);
  const Rational value = quad * size * size + lin * size + constant;
  return {to_u64(value, "tree ball count"), PredictionKind::LowerBoundWitness, "tree-ball-exact"};
}

std::uint64_t tree_weight(int degree, int d1) {
  if (degree < 2 || d1 < 0) throw std::invalid_argument("tree weight needs r >= 2, d1 >= 0");
  if (degree == 2) return static_cast<std::uint64_t>(2 * d1 + 1);
  // ((r-1)^(2*d1+1) - 1) / (r-2), summed as the geometric series it is.
  const std::uint64_t ratio = static_cast<std::uint64_t>(degree - 1);
  std::uint64_t weight = 0;
  std::uint64_t power = 1;
  for (int k = 0; k < 2 * d1 + 1; ++k) {
    weight += power;
    power *= ratio;
  }
  return weight;
}

Rational tree_limsup_coefficient(int degree) {
  if (degree < 2) throw std::invalid_argument("tree coefficient needs r >= 2");
  const long long r = degree;
  return Rational(r * r + (r - 2) * (r - 2), 2 * r * r);
}

double growth_exponent(const std::vector<std::uint64_t>& sizes,
                       const std::vector<std::uint64_t>& counts) {
  if (sizes.size() != counts.size()) {
    throw std::invalid_argument("growth exponent needs matching size/count lists");
  }
  if (sizes.size() < 2) throw std::invalid_argument("growth exponent needs at least 2 samples");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || counts[i] == 0) {
      throw std::invalid_argument("growth exponent needs positive sizes and counts");
    }
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument("growth exponent needs strictly increasing sizes");
    }
  }
  const double m = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double x = std::log(static_cast<double>(sizes[i]));
    const double y = std::log(static_cast<double>(counts[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace ap3
