#include "dopoly/weil.hpp"

#include <cmath>
#include <map>
#include <vector>

namespace dopoly {

namespace {

// v <= rad * sqrt(q), all quantities nonnegative on the right.
bool leq_rad_sqrt(long long v, long long rad, std::uint64_t q) {
  if (v <= 0) return true;
  return static_cast<__int128>(v) * v <=
         static_cast<__int128>(rad) * rad * static_cast<__int128>(q);
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      while (q % d == 0) q /= d;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

}  // namespace

bool WeilBound::lower_leq(long long n) const {
  // lower_int - rad sqrt(q) <= n  <=>  lower_int - n <= rad sqrt(q)
  return leq_rad_sqrt(lower_int - n, rad, q);
}

bool WeilBound::geq_upper(long long n) const {
  return leq_rad_sqrt(n - upper_int, rad, q);
}

double WeilBound::lower_value() const {
  return static_cast<double>(lower_int) -
         static_cast<double>(rad) * std::sqrt(static_cast<double>(q));
}

double WeilBound::upper_value() const {
  return static_cast<double>(upper_int) +
         static_cast<double>(rad) * std::sqrt(static_cast<double>(q));
}

WeilBound weil_interval(std::uint64_t q, int deg) {
  if (deg < 1) throw Error("weil_interval needs deg >= 1");
  if (!is_prime_power(q)) throw Error("weil_interval needs a prime power q");
  WeilBound b;
  b.q = q;
  b.deg = deg;
  b.rad = static_cast<long long>(deg - 1) * (deg - 2);
  if (b.rad < 0) b.rad = 0;  // deg = 1
  b.lower_int = static_cast<long long>(q) + 1 - deg;
  b.upper_int = static_cast<long long>(q) + 1;
  return b;
}

int min_e_exceeding(long long p, int deg, long long boundary) {
  if (p < 3 || !is_prime_power(static_cast<std::uint64_t>(p)))
    throw Error("min_e_exceeding needs an odd prime p");
  if (deg < 1) throw Error("min_e_exceeding needs deg >= 1");
  long long rad = static_cast<long long>(deg - 1) * (deg - 2);
  if (rad < 0) rad = 0;
  __int128 q = 1;
  for (int e = 1; e <= 127; ++e) {
    q *= p;
    if (q > (static_cast<__int128>(1) << 100))
      throw Error("threshold not reached in supported range");
    __int128 a = q + 1 - deg - boundary;
    if (a > 0 && a * a > static_cast<__int128>(rad) * rad * q) return e;
  }
  throw Error("threshold not reached in supported range");
}

long long count_bivariate_zeros(const BivariatePoly& h) {
  const Field& F = h.field();
  const std::uint64_t q = F.size();
  if (q > 2187)
    throw FieldTooLargeError("zero counting is quadratic; q capped at 3^7");

  std::vector<FieldElement> elems;
  elems.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(F.element_at(i));

  // Per y-exponent value tables so the inner loop is a few fused
  // multiply-adds instead of a fresh pow per pair.
  std::map<long long, std::vector<FieldElement>> ypows;
  for (const auto& [e, c] : h.terms())
    ypows.try_emplace(e.second);
  for (auto& [ye, table] : ypows) {
    table.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i)
      table.push_back(F.pow(elems[i], static_cast<unsigned long long>(ye)));
  }

  long long count = 0;
  std::vector<std::pair<const std::vector<FieldElement>*, FieldElement>> parts;
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    parts.clear();
    // collapse h(x, .) to (y-exponent -> coefficient)
    std::map<long long, FieldElement> uni;
    for (const auto& [e, c] : h.terms()) {
      FieldElement v =
          c * F.pow(elems[xi], static_cast<unsigned long long>(e.first));
      auto [it, inserted] = uni.try_emplace(e.second, v);
      if (!inserted) it->second += v;
    }
    for (const auto& [ye, c] : uni)
      if (!c.is_zero()) parts.emplace_back(&ypows.at(ye), c);
    if (parts.empty()) {
      count += static_cast<long long>(q);  // identically zero in y
      continue;
    }
    for (std::uint64_t yi = 0; yi < q; ++yi) {
      FieldElement acc = F.zero();
      for (const auto& [table, c] : parts) acc += c * (*table)[yi];
      if (acc.is_zero()) ++count;
    }
  }
  return count;
}

long long xy_zero_solutions(const BivariatePoly& h) {
  const Field& F = h.field();
  long long count = 0;
  for (const auto& v : F.elements()) {
    if (eval(h, F.zero(), v).is_zero()) ++count;
    if (eval(h, v, F.zero()).is_zero()) ++count;
  }
  if (eval(h, F.zero(), F.zero()).is_zero()) --count;  // origin counted twice
  return count;
}

}  // namespace dopoly
