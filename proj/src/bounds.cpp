#include "regind/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace regind {

int CapProfile::cap(int degree) const {
  if (degree < delta)
    return 0;
  if (degree >= tail_start)
    return tail;
  return caps[degree - delta];
}

bool CapProfile::well_formed() const {
  if (a < 1 || b < 0 || delta < 0 || k < 0 || tail < 1)
    return false;
  if (tail_start < delta ||
      static_cast<int>(caps.size()) != tail_start - delta)
    return false;
  return std::all_of(caps.begin(), caps.end(), [](int c) { return c >= 1; });
}

std::string CapProfile::name() const {
  std::string out = family;
  if (family_param > 0)
    out += "(" + std::to_string(family_param) + ")";
  out += " delta=" + std::to_string(delta) + " k=" + std::to_string(k);
  return out;
}

int q_of(int k) {
  if (k < 1)
    throw std::invalid_argument("q_of: k must be >= 1");
  int q = 0;
  while ((q + 1) * (q + 1) + (q + 1) + 2 <= 2 * k)
    ++q;
  return q;
}

Rational f_k_eval(int k, int x) {
  if (x <= 2 * k)
    throw std::invalid_argument("f_k_eval: x must exceed 2k");
  const int q = q_of(k);
  // Twice a_k(x) keeps the sum integral.
  std::int64_t twice_a = 0;
  for (int i = k; i <= k + q; ++i) {
    const std::int64_t t = i - k;
    twice_a += static_cast<std::int64_t>(x - i) * (t * t + t + 2);
  }
  std::int64_t b = 0;
  for (int i = k + q + 1; i <= x - 1; ++i)
    b += static_cast<std::int64_t>(x - i) * (k + 1);
  return (Rational(twice_a, 2) + Rational(b)) / Rational(x - 2 * k);
}

DerivedBound counting_bound(const CapProfile &profile, int r) {
  if (!profile.well_formed())
    throw std::invalid_argument("counting_bound: malformed profile");
  if (r <= 2 * profile.a)
    throw std::invalid_argument("counting_bound: r must exceed 2a");
  std::int64_t weight = 0;
  for (int i = profile.delta; i < r; ++i)
    weight += static_cast<std::int64_t>(r - i) * profile.cap(i);
  const std::int64_t slope = r - 2 * profile.a;
  DerivedBound out;
  out.coefficient = Rational(slope, weight);
  out.additive = Rational(2 * profile.b, slope);
  out.r_used = r;
  out.profile = profile;
  return out;
}

DerivedBound optimize_r(const CapProfile &profile) {
  const std::int64_t lo = 2 * profile.a + 1;
  const std::int64_t hi =
      2 * profile.a + 4 * std::max<std::int64_t>(profile.k, profile.a) + 40;
  DerivedBound best = counting_bound(profile, static_cast<int>(lo));
  for (std::int64_t r = lo + 1; r <= hi; ++r) {
    auto candidate = counting_bound(profile, static_cast<int>(r));
    if (candidate.coefficient > best.coefficient)
      best = candidate;
  }
  return best;
}

CapProfile ktree_profile(int k) {
  const int q = q_of(k);
  CapProfile p;
  p.family = "k-tree";
  p.family_param = k;
  p.a = k;
  p.b = static_cast<std::int64_t>(k) * (k + 1) / 2;
  p.delta = k;
  p.k = 0;
  for (int t = 0; t <= q; ++t)
    p.caps.push_back(std::min((t * t + t + 2) / 2, k + 1));
  p.tail_start = k + q + 1;
  p.tail = k + 1;
  p.min_n = k + q + 2;
  return p;
}

DerivedBound derive_table1(int k) {
  if (k < 1 || k > 10)
    throw std::invalid_argument("derive_table1: k must be in 1..10");
  return optimize_r(ktree_profile(k));
}

namespace {

std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v)
    --r;
  while ((r + 1) * (r + 1) <= v)
    ++r;
  return r;
}

struct Theorem4Terms {
  std::int64_t numerator; // 24k
  std::int64_t poly;      // 48k^3 + 84k^2 - 72k + 36
  std::int64_t radical_coeff;
  std::int64_t radicand;
};

Theorem4Terms theorem4_terms(int k) {
  if (k < 2)
    throw std::invalid_argument("theorem4: requires k >= 2");
  const std::int64_t kk = k;
  return {24 * kk, 48 * kk * kk * kk + 84 * kk * kk - 72 * kk + 36,
          16 * kk * kk - 13, 8 * kk - 7};
}

} // namespace

Rational theorem4_coefficient_lower(int k) {
  auto t = theorem4_terms(k);
  constexpr std::int64_t scale = 1 << 20;
  // floor(sqrt(radicand) * scale), a lower bound on the radical.
  const std::int64_t root = isqrt(t.radicand * scale * scale);
  const Rational denom =
      Rational(t.poly) - Rational(t.radical_coeff) * Rational(root, scale);
  return Rational(t.numerator) / denom;
}

Rational theorem4_bound(int k, std::int64_t n) {
  if (k < 2)
    throw std::invalid_argument("theorem4_bound: requires k >= 2");
  if (n < k + q_of(k) + 2)
    throw std::invalid_argument("theorem4_bound: n below k + q(k) + 2");
  return theorem4_coefficient_lower(k) * Rational(n);
}

int compare_with_theorem4(const Rational &c, int k) {
  using Big = boost::multiprecision::cpp_rational;
  auto t = theorem4_terms(k);
  if (c < Rational(0))
    throw std::invalid_argument("compare_with_theorem4: negative coefficient");
  // Squares of the terms overflow 64 bits for the coefficients of interest.
  const Big cc = Big(c.numerator()) / Big(c.denominator());
  // c >= 24k / (P - Q sqrt(s))  <=>  c P - 24k >= c Q sqrt(s)  (P - Q sqrt(s) > 0)
  const Big lhs = cc * t.poly - t.numerator;
  const Big rhs = cc * t.radical_coeff;
  if (lhs < 0)
    return -1;
  const Big diff = lhs * lhs - rhs * rhs * t.radicand;
  return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
}

Rational tree_forest_bound(ForestFamily family, int k, std::int64_t n) {
  if (k < 0)
    throw std::invalid_argument("tree_forest_bound: k must be non-negative");
  if (family == ForestFamily::tree && n < 2)
    throw std::invalid_argument("tree_forest_bound: trees need n >= 2");
  const Rational base(n + 2);
  if (family == ForestFamily::tree) {
    if (k == 0)
      return base / 4;
    if (k == 1)
      return base * 2 / 7;
    return base / 3;
  }
  if (k == 0)
    return base / 5;
  if (k == 1)
    return base * 2 / 9;
  return base / 4;
}

namespace {

CapProfile make(std::string family, int param, std::int64_t a, std::int64_t b,
                int delta, int k, std::vector<int> caps, int tail, int min_n) {
  CapProfile p;
  p.family = std::move(family);
  p.family_param = param;
  p.a = a;
  p.b = b;
  p.delta = delta;
  p.k = k;
  p.tail_start = delta + static_cast<int>(caps.size());
  p.caps = std::move(caps);
  p.tail = tail;
  p.min_n = min_n;
  return p;
}

// Caps for delta <= i < tail_start drawn from a full-degree table.
std::vector<int> slice(const std::vector<int> &by_degree, int delta) {
  if (delta >= static_cast<int>(by_degree.size()))
    return {};
  return {by_degree.begin() + delta, by_degree.end()};
}

} // namespace

CapProfile planar_profile(int delta, int k) {
  if (delta < 1 || delta > 5 || (k != 0 && k != 2))
    throw std::invalid_argument("planar_profile: delta in 1..5, k in {0,2}");
  if (k == 0) // chi(V_i) <= i for i <= 3, <= 4 beyond
    return make("planar", 0, 3, 6, delta, 0, slice({0, 1, 2, 3}, delta), 4, 5);
  // chi_2(V_1) = chi_2(V_2) = 1, <= 2 up to degree 5, <= 3 beyond
  return make("planar", 0, 3, 6, delta, 2, slice({0, 1, 1, 2, 2, 2}, delta), 3,
              5);
}

CapProfile maximal_planar_profile(int delta, int k) {
  if (delta < 3 || delta > 5 || (k != 0 && k != 2))
    throw std::invalid_argument(
        "maximal_planar_profile: delta in 3..5, k in {0,2}");
  if (k == 0) // degree-3 vertices independent, chi(V_4) <= 3
    return make("maximal-planar", 0, 3, 6, delta, 0,
                slice({0, 0, 0, 1, 3}, delta), 4, 5);
  return make("maximal-planar", 0, 3, 6, delta, 2,
              slice({0, 0, 0, 1, 2, 2}, delta), 3, 5);
}

CapProfile outerplanar_profile(int k) {
  if (k == 0)
    return make("outerplanar", 0, 2, 3, 2, 0, {2}, 3, 4);
  if (k == 2)
    return make("outerplanar", 0, 2, 3, 2, 2, {1}, 2, 4);
  throw std::invalid_argument("outerplanar_profile: k in {0,2}");
}

CapProfile maximal_outerplanar_profile(int k) {
  // Degree-2 vertices of a maximal outerplanar graph on n >= 4 vertices are
  // pairwise nonadjacent.
  if (k == 0)
    return make("maximal-outerplanar", 0, 2, 3, 2, 0, {1, 2}, 3, 4);
  if (k == 2)
    return make("maximal-outerplanar", 0, 2, 3, 2, 2, {1}, 2, 4);
  throw std::invalid_argument("maximal_outerplanar_profile: k in {0,2}");
}

CapProfile kdegenerate_profile(int degeneracy, int delta) {
  if (degeneracy < 1 || delta < 1 || delta > degeneracy)
    throw std::invalid_argument(
        "kdegenerate_profile: need 1 <= delta <= degeneracy");
  std::vector<int> caps;
  for (int i = delta; i <= degeneracy; ++i)
    caps.push_back(i);
  const std::int64_t d = degeneracy;
  return make("k-degenerate", degeneracy, d, d * (d + 1) / 2, delta, 0,
              std::move(caps), degeneracy + 1, degeneracy + 2);
}

CapProfile maximal_kdegenerate_profile(int degeneracy) {
  if (degeneracy < 1)
    throw std::invalid_argument("maximal_kdegenerate_profile: degeneracy >= 1");
  const std::int64_t d = degeneracy;
  return make("maximal-k-degenerate", degeneracy, d, d * (d + 1) / 2,
              degeneracy, 0, {1}, degeneracy + 1, degeneracy + 2);
}

std::vector<CapProfile> standard_profiles() {
  std::vector<CapProfile> out;
  for (int k : {0, 2}) {
    for (int delta = 1; delta <= 5; ++delta)
      out.push_back(planar_profile(delta, k));
    for (int delta = 3; delta <= 5; ++delta)
      out.push_back(maximal_planar_profile(delta, k));
    out.push_back(outerplanar_profile(k));
    out.push_back(maximal_outerplanar_profile(k));
  }
  for (int d = 2; d <= 6; ++d) {
    for (int delta = 1; delta <= d; ++delta)
      out.push_back(kdegenerate_profile(d, delta));
    out.push_back(maximal_kdegenerate_profile(d));
  }
  return out;
}

} // namespace regind
