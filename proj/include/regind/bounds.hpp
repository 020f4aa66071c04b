#pragma once

#include "regind/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace regind {

/// Degree-class caps for a graph family: n_i <= cap(i) * alpha_{k-reg}(G),
/// together with the edge ceiling e(G) <= a*n - b.
struct CapProfile {
  std::string family;
  /// Family parameter where one exists (the k of a k-tree, the degeneracy of
  /// a k-degenerate family); 0 otherwise.
  int family_param = 0;
  std::int64_t a = 1;
  std::int64_t b = 0;
  int delta = 0;
  /// Defect bound of the invariant being bounded (0 for alpha_reg).
  int k = 0;
  /// caps[i - delta] for delta <= i < tail_start.
  std::vector<int> caps;
  int tail_start = 0;
  int tail = 1;
  /// Smallest order for which the caps are guaranteed.
  int min_n = 1;

  int cap(int degree) const;
  bool well_formed() const;
  std::string name() const;
};

/// Lower bound of the form coefficient * (n + additive).
struct DerivedBound {
  Rational coefficient;
  Rational additive;
  int r_used = 0;
  CapProfile profile;

  Rational at(std::int64_t n) const {
    return coefficient * (Rational(n) + additive);
  }
};

/// Largest q with q^2 + q + 2 <= 2k.
int q_of(int k);

/// (a_k(x) + b_k(x)) / (x - 2k) at an integer x > 2k.
Rational f_k_eval(int k, int x);

/// The degree-counting bound at truncation degree r > 2a:
/// alpha >= (n(r - 2a) + 2b) / sum_{i=delta}^{r-1} (r - i) c_i.
DerivedBound counting_bound(const CapProfile &profile, int r);

/// Scans r in (2a, 2a + 4*max(k, a) + 40] and keeps the largest coefficient
/// (smallest r on ties).
DerivedBound optimize_r(const CapProfile &profile);

CapProfile ktree_profile(int k);
DerivedBound derive_table1(int k);

/// Closed-form k-tree bound, valid for k >= 2, coefficient evaluated with
/// sqrt(8k-7) rounded down so the returned value never exceeds the true
/// closed form. Throws std::invalid_argument for k < 2 or n < k + q(k) + 2.
Rational theorem4_bound(int k, std::int64_t n);
Rational theorem4_coefficient_lower(int k);

/// Exact sign of c - 24k / (48k^3 + 84k^2 - 72k - (16k^2 - 13)sqrt(8k-7) + 36).
int compare_with_theorem4(const Rational &c, int k);

enum class ForestFamily { tree, forest };

/// Closed forms for trees ((n+2)/4, 2(n+2)/7, (n+2)/3 at k = 0, 1, >= 2)
/// and forests ((n+2)/5, 2(n+2)/9, (n+2)/4).
Rational tree_forest_bound(ForestFamily family, int k, std::int64_t n);

CapProfile planar_profile(int delta, int k);
CapProfile maximal_planar_profile(int delta, int k);
CapProfile outerplanar_profile(int k);
CapProfile maximal_outerplanar_profile(int k);
CapProfile kdegenerate_profile(int degeneracy, int delta);
CapProfile maximal_kdegenerate_profile(int degeneracy);

/// Every profile behind the planar, outerplanar and k-degenerate table rows
/// (degeneracy 2..6 for the k-degenerate families).
std::vector<CapProfile> standard_profiles();

} // namespace regind
