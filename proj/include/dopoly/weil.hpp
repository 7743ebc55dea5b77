#pragma once

// Exact interval arithmetic for the point-count bound
//   q + 1 - (d-1)(d-2) sqrt(q) - d  <=  N  <=  q + 1 + (d-1)(d-2) sqrt(q)
// of an absolutely irreducible bivariate polynomial of total degree d, plus
// the threshold solver and brute-force zero counting used to validate its
// consequences on small fields. Endpoints are kept in A + B sqrt(q) form and
// compared by sign analysis and squaring; odd e makes sqrt(q) irrational and
// floating point would risk off-by-one errors exactly at the thresholds.
// Absolute irreducibility is an input assumption, never tested here.

#include <cstdint>
#include <optional>

#include "dopoly/polynomial.hpp"

namespace dopoly {

struct WeilBound {
  std::uint64_t q = 0;
  int deg = 0;
  long long lower_int = 0;   // lower = lower_int - rad * sqrt(q)
  long long upper_int = 0;   // upper = upper_int + rad * sqrt(q)
  long long rad = 0;         // (deg-1)(deg-2), clamped at 0
  std::optional<long long> measured;  // zero count, when attached

  bool lower_leq(long long n) const;  // lower <= n, exact
  bool geq_upper(long long n) const;  // n <= upper, exact
  bool contains(long long n) const { return lower_leq(n) && geq_upper(n); }

  double lower_value() const;  // display only
  double upper_value() const;  // display only
};

WeilBound weil_interval(std::uint64_t q, int deg);

// Smallest e with p^e + 1 - (deg-1)(deg-2) sqrt(p^e) - deg > boundary,
// decided exactly by integer squaring.
int min_e_exceeding(long long p, int deg, long long boundary);

// Exact count of (x, y) with h(x, y) = 0; FieldTooLargeError beyond q = 3^7.
long long count_bivariate_zeros(const BivariatePoly& h);

// Zeros of h on the two axes (x = 0 or y = 0).
long long xy_zero_solutions(const BivariatePoly& h);

}  // namespace dopoly
