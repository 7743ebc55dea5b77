#include "dopoly/do_classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "parallel_util.hpp"

namespace dopoly {

namespace {

bool is_power_of(long long v, long long p, int* exponent = nullptr) {
  if (v < 1) return false;
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) return false;
  if (exponent) *exponent = e;
  return true;
}

// d = base * p^n for some n >= 0
bool d_is_base_times_ppow(long long d, long long p, long long base) {
  return d % base == 0 && is_power_of(d / base, p);
}

void require_odd_prime(long long p) {
  if (p == 2)
    throw UnsupportedCharacteristicError(
        "characteristic 2 is outside the classification");
  if (!is_prime(p))
    throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

std::optional<PowerSumWitness> is_p_power_sum(long long n, long long p) {
  if (n < 2) return std::nullopt;
  long long pi = 1;
  for (int i = 0; 2 * pi <= n; ++i) {
    long long rest = n - pi;
    int j = 0;
    if (rest >= pi && is_power_of(rest, p, &j) && j >= i)
      return PowerSumWitness{i, j};
    if (pi > n / p) break;
    pi *= p;
  }
  return std::nullopt;
}

DOVerdict classify_do(long long k, long long m, long long d, long long p) {
  require_odd_prime(p);
  if (k < 1) throw InvalidKError("classification needs k >= 1");
  if (d < 1) throw Error("classification needs d >= 1");
  if (m < 0) throw Error("classification needs m >= 0");
  auto sym = frak_d(k, m);
  DOVerdict v;
  v.is_do = true;
  for (const auto& [i, c] : reduced_terms(sym, p)) {
    long long exponent = (k - 2 * i) * d;
    auto w = is_p_power_sum(exponent, p);
    v.surviving_terms.push_back({exponent, c, i, w});
    if (!w) {
      v.is_do = false;
      if (!v.offending_term || exponent < *v.offending_term)
        v.offending_term = exponent;
    }
  }
  return v;
}

bool is_do(long long k, long long m, long long d, long long p) {
  return classify_do(k, m, d, p).is_do;
}

std::optional<FormWitness> form_witness(long long d, long long p,
                                        int divisor) {
  if (divisor < 1 || divisor > 4)
    throw Error("form_witness divisor must be in {1,2,3,4}");
  if (d < 1) return std::nullopt;
  long long target = divisor * d;
  // p is odd, so p^alpha + 1 is never divisible by p: n is pinned to the
  // p-adic valuation of the target.
  int n = 0;
  while (target % p == 0) {
    target /= p;
    ++n;
  }
  int alpha = 0;
  if (target >= 2 && is_power_of(target - 1, p, &alpha))
    return FormWitness{n, alpha, divisor};
  return std::nullopt;
}

namespace {

bool dform(long long d, long long p, int divisor) {
  return form_witness(d, p, divisor).has_value();
}

// k with all powers of p stripped; l receives the valuation.
long long strip_p(long long k, long long p, int* l = nullptr) {
  int v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  if (l) *l = v;
  return k;
}

// First kind (m = 0 mod p), p = 3: k0 in {1, 2, 4, 5} up to powers of 3.
bool first_kind_p3(long long k, long long d) {
  switch (strip_p(k, 3)) {
    case 1: return dform(d, 3, 1);
    case 2: return dform(d, 3, 2);
    case 4: return d_is_base_times_ppow(d, 3, 1);
    case 5: return d_is_base_times_ppow(d, 3, 2);
    default: return false;
  }
}

// Second kind (m = 1 mod 3), fixed k.
bool second_kind_p3(long long k, long long d) {
  switch (k) {
    case 1: return dform(d, 3, 1);
    case 2: return dform(d, 3, 2);
    case 4: return dform(d, 3, 4);
    case 3: return dform(d, 3, 1);
    case 5: return d_is_base_times_ppow(d, 3, 2);
    case 6: return d_is_base_times_ppow(d, 3, 1);
    case 7: return d_is_base_times_ppow(d, 3, 4);
    case 9: return d_is_base_times_ppow(d, 3, 4);
    case 10: return d_is_base_times_ppow(d, 3, 1);
    case 12: return d_is_base_times_ppow(d, 3, 1);
    default: return false;
  }
}

// Third kind (m = 2 mod p); the p = 3 and p = 5 special families.
bool third_kind(long long k, long long d, long long p) {
  if (k == 1) return dform(d, p, 1);
  if (k == 2) return dform(d, p, 2);
  if (p == 3) {
    switch (k) {
      case 3: return dform(d, 3, 1);
      case 4:
      case 6:
      case 12: return d_is_base_times_ppow(d, 3, 1);
      case 5: return d_is_base_times_ppow(d, 3, 2);
      case 9: return d_is_base_times_ppow(d, 3, 4);
      default: return false;
    }
  }
  if (p == 5 && (k == 3 || k == 5)) return d_is_base_times_ppow(d, 5, 2);
  return false;
}

bool first_kind_p5(long long k, long long d) {
  switch (strip_p(k, 5)) {
    case 1: return dform(d, 5, 1);
    case 2: return dform(d, 5, 2);
    case 3: return d_is_base_times_ppow(d, 5, 2);
    default: return false;
  }
}

bool second_kind_p5(long long k, long long d) {
  switch (k) {
    case 1: return dform(d, 5, 1);
    case 2: return dform(d, 5, 2);
    case 3: return d_is_base_times_ppow(d, 5, 2);
    case 5: return d_is_base_times_ppow(d, 5, 2);
    case 6: return d_is_base_times_ppow(d, 5, 1);
    default: return false;
  }
}

// Fourth kind (m = 3 mod p), p >= 5.
bool fourth_kind(long long k, long long d, long long p) {
  if (k == 1) return dform(d, p, 1);
  if (k == 2) return dform(d, p, 2);
  if (k == 3) return dform(d, p, 3);
  if (k == 5 && p == 5) return d_is_base_times_ppow(d, 5, 2);
  return false;
}

// Fifth kind (m = 4 mod p), p >= 5.
bool fifth_kind(long long k, long long d, long long p) {
  if (k == 1) return dform(d, p, 1);
  if (k == 2) return dform(d, p, 2);
  if (k == 4) return dform(d, p, 4);
  if ((k == 3 || k == 5) && p == 5) return d_is_base_times_ppow(d, 5, 2);
  return false;
}

// First kind for p > 5: only k0 in {1, 2} survive.
bool first_kind_large_p(long long k, long long d, long long p) {
  switch (strip_p(k, p)) {
    case 1: return dform(d, p, 1);
    case 2: return dform(d, p, 2);
    default: return false;
  }
}

}  // namespace

bool theorem_predicate(long long k, long long m, long long d, long long p) {
  require_odd_prime(p);
  if (k < 1 || d < 1 || m < 0)
    throw Error("theorem_predicate needs k, d >= 1 and m >= 0");
  long long mm = m % p;
  if (p == 3) {
    if (mm == 0) return first_kind_p3(k, d);
    if (mm == 1) return second_kind_p3(k, d);
    return third_kind(k, d, 3);
  }
  if (p == 5) {
    switch (mm) {
      case 0: return first_kind_p5(k, d);
      case 1: return second_kind_p5(k, d);
      case 2: return third_kind(k, d, 5);
      case 3: return fourth_kind(k, d, 5);
      default: return fifth_kind(k, d, 5);
    }
  }
  switch (mm) {
    case 0: return first_kind_large_p(k, d, p);
    case 1: return k == 1 ? dform(d, p, 1) : (k == 2 && dform(d, p, 2));
    case 2: return third_kind(k, d, p);
    case 3: return fourth_kind(k, d, p);
    case 4: return fifth_kind(k, d, p);
    default: return k == 1 ? dform(d, p, 1) : (k == 2 && dform(d, p, 2));
  }
}

SweepResult classify_sweep(long long p, long long k_max,
                           const std::vector<long long>& m_values,
                           long long d_max, unsigned jobs) {
  require_odd_prime(p);
  if (k_max < 1 || d_max < 1) throw Error("sweep bounds must be >= 1");
  SweepResult result;
  result.p = p;

  struct Task {
    long long k, m;
  };
  std::vector<Task> tasks;
  for (long long k = 1; k <= k_max; ++k)
    for (long long m : m_values) tasks.push_back({k, m});

  std::vector<std::vector<SweepRow>> buckets(tasks.size());
  detail::parallel_for(tasks.size(), jobs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      auto [k, m] = tasks[t];
      // One symbolic build per (k, m); only the exponents change with d.
      auto rt = reduced_terms(frak_d(k, m), p);
      auto& rows = buckets[t];
      rows.reserve(static_cast<std::size_t>(d_max));
      for (long long d = 1; d <= d_max; ++d) {
        SweepRow row{k, m, d, true, theorem_predicate(k, m, d, p), ""};
        std::ostringstream wit;
        long long offending = -1;
        for (const auto& [i, c] : rt) {
          long long exponent = (k - 2 * i) * d;
          auto w = is_p_power_sum(exponent, p);
          if (w) {
            if (wit.tellp() > 0) wit << ";";
            wit << exponent << "=" << p << "^" << w->i << "+" << p << "^"
                << w->j;
          } else {
            row.observed_do = false;
            if (offending < 0 || exponent < offending) offending = exponent;
          }
        }
        row.witnesses = row.observed_do
                            ? wit.str()
                            : "offending=" + std::to_string(offending);
        rows.push_back(std::move(row));
      }
    }
  });

  for (auto& rows : buckets)
    for (auto& row : rows) {
      if (row.mismatch()) result.mismatches.push_back(row);
      result.rows.push_back(std::move(row));
    }
  return result;
}

// ---------------------------------------------------------------------------
// DO family table

namespace {

using FE = FamilyExponent;

DOFamily monomial_family(long long p, long long m_res, long long k0,
                         bool scales, int divisor, std::string label) {
  DOFamily f;
  f.p = p;
  f.m_residue = m_res;
  f.k0 = k0;
  f.k_scales_by_p = scales;
  f.alpha_free = true;
  f.d_divisor = divisor;
  f.terms = {{1, 0, FE{1, 0, true}}};
  f.label = std::move(label);
  return f;
}

DOFamily fixed_family(long long p, long long m_res, long long k0, bool scales,
                      long long d_base, std::vector<FamilyTerm> terms,
                      std::string label) {
  DOFamily f;
  f.p = p;
  f.m_residue = m_res;
  f.k0 = k0;
  f.k_scales_by_p = scales;
  f.alpha_free = false;
  f.d_base = d_base;
  f.terms = std::move(terms);
  f.label = std::move(label);
  return f;
}

}  // namespace

std::vector<DOFamily> appendix_table(long long p) {
  require_odd_prime(p);
  std::vector<DOFamily> fams;
  if (p == 3) {
    // m = 0 (mod 3): first kind, closed under k -> 3k.
    fams.push_back(monomial_family(3, 0, 1, true, 1, "p=3 m=0 k=3^l"));
    fams.push_back(monomial_family(3, 0, 2, true, 2, "p=3 m=0 k=2*3^l"));
    fams.push_back(fixed_family(3, 0, 4, true, 1,
                                {{1, 0, FE{4, 0}}, {2, 1, FE{2, 0}}},
                                "p=3 m=0 k=4*3^l"));
    fams.push_back(fixed_family(
        3, 0, 5, true, 2,
        {{1, 0, FE{10, 0}}, {1, 1, FE{2, 1}}, {2, 2, FE{2, 0}}},
        "p=3 m=0 k=5*3^l"));
    // m = 1 (mod 3): second kind.
    fams.push_back(monomial_family(3, 1, 1, false, 1, "p=3 m=1 k=1"));
    fams.push_back(monomial_family(3, 1, 2, false, 2, "p=3 m=1 k=2"));
    fams.push_back(monomial_family(3, 1, 4, false, 4, "p=3 m=1 k=4"));
    {
      DOFamily f;
      f.p = 3;
      f.m_residue = 1;
      f.k0 = 3;
      f.alpha_free = true;
      f.d_divisor = 1;
      f.terms = {{1, 0, FE{1, 1, true}}, {1, 1, FE{1, 0, true}}};
      f.label = "p=3 m=1 k=3";
      fams.push_back(std::move(f));
    }
    fams.push_back(fixed_family(3, 1, 5, false, 2,
                                {{1, 0, FE{10, 0}}, {2, 1, FE{2, 1}}},
                                "p=3 m=1 k=5"));
    fams.push_back(fixed_family(3, 1, 6, false, 1,
                                {{1, 0, FE{2, 1}}, {1, 1, FE{4, 0}}},
                                "p=3 m=1 k=6"));
    fams.push_back(fixed_family(
        3, 1, 7, false, 4,
        {{1, 0, FE{28, 0}}, {1, 2, FE{4, 1}}, {2, 3, FE{4, 0}}},
        "p=3 m=1 k=7"));
    fams.push_back(fixed_family(3, 1, 9, false, 4,
                            {{1, 0, FE{4, 2}},
                             {1, 1, FE{28, 0}},
                             {1, 3, FE{4, 1}},
                             {2, 4, FE{4, 0}}},
                            "p=3 m=1 k=9"));
    fams.push_back(fixed_family(
        3, 1, 10, false, 1,
        {{1, 0, FE{10, 0}}, {1, 2, FE{2, 1}}, {1, 3, FE{4, 0}}},
        "p=3 m=1 k=10"));
    fams.push_back(fixed_family(
        3, 1, 12, false, 1,
        {{1, 0, FE{4, 1}}, {1, 1, FE{10, 0}}, {1, 4, FE{4, 0}}},
        "p=3 m=1 k=12"));
    // m = 2 (mod 3): third kind.
    fams.push_back(monomial_family(3, 2, 1, false, 1, "p=3 m=2 k=1"));
    fams.push_back(monomial_family(3, 2, 2, false, 2, "p=3 m=2 k=2"));
    {
      DOFamily f;
      f.p = 3;
      f.m_residue = 2;
      f.k0 = 3;
      f.alpha_free = true;
      f.d_divisor = 1;
      f.terms = {{1, 0, FE{1, 1, true}}, {2, 1, FE{1, 0, true}}};
      f.label = "p=3 m=2 k=3";
      fams.push_back(std::move(f));
    }
    fams.push_back(fixed_family(3, 2, 4, false, 1,
                                {{1, 0, FE{4, 0}}, {1, 1, FE{2, 0}}},
                                "p=3 m=2 k=4"));
    fams.push_back(fixed_family(3, 2, 5, false, 2,
                                {{1, 0, FE{10, 0}}, {1, 2, FE{2, 0}}},
                                "p=3 m=2 k=5"));
    fams.push_back(fixed_family(3, 2, 6, false, 1,
                                {{1, 0, FE{2, 1}}, {2, 1, FE{4, 0}}},
                                "p=3 m=2 k=6"));
    fams.push_back(fixed_family(3, 2, 9, false, 4,
                            {{1, 0, FE{4, 2}},
                             {2, 1, FE{28, 0}},
                             {2, 3, FE{4, 1}},
                             {1, 4, FE{4, 0}}},
                            "p=3 m=2 k=9"));
    fams.push_back(fixed_family(3, 2, 12, false, 1,
                            {{1, 0, FE{4, 1}},
                             {2, 1, FE{10, 0}},
                             {1, 3, FE{2, 1}},
                             {2, 4, FE{4, 0}}},
                            "p=3 m=2 k=12"));
  } else if (p == 5) {
    fams.push_back(monomial_family(5, 0, 1, true, 1, "p=5 m=0 k=5^l"));
    fams.push_back(monomial_family(5, 0, 2, true, 2, "p=5 m=0 k=2*5^l"));
    fams.push_back(fixed_family(5, 0, 3, true, 2,
                                {{1, 0, FE{6, 0}}, {2, 1, FE{2, 0}}},
                                "p=5 m=0 k=3*5^l"));
    fams.push_back(monomial_family(5, 1, 1, false, 1, "p=5 m=1 k=1"));
    fams.push_back(monomial_family(5, 1, 2, false, 2, "p=5 m=1 k=2"));
    fams.push_back(fixed_family(5, 1, 3, false, 2,
                                {{1, 0, FE{6, 0}}, {3, 1, FE{2, 0}}},
                                "p=5 m=1 k=3"));
    fams.push_back(fixed_family(
        5, 1, 5, false, 2,
        {{1, 0, FE{2, 1}}, {1, 1, FE{6, 0}}, {3, 2, FE{2, 0}}},
        "p=5 m=1 k=5"));
    // The published table prints this row with k = 9, but the polynomial it
    // lists is the k = 6, d = 5^n instance; k = 9 admits no valid d at all.
    fams.push_back(fixed_family(5, 1, 6, false, 1,
                                {{1, 0, FE{6, 0}}, {1, 2, FE{2, 0}}},
                                "p=5 m=1 k=6"));
    fams.push_back(monomial_family(5, 2, 1, false, 1, "p=5 m=2 k=1"));
    fams.push_back(monomial_family(5, 2, 2, false, 2, "p=5 m=2 k=2"));
    fams.push_back(fixed_family(5, 2, 3, false, 2,
                                {{1, 0, FE{6, 0}}, {4, 1, FE{2, 0}}},
                                "p=5 m=2 k=3"));
    fams.push_back(fixed_family(
        5, 2, 5, false, 2,
        {{1, 0, FE{2, 1}}, {2, 1, FE{6, 0}}, {1, 2, FE{2, 0}}},
        "p=5 m=2 k=5"));
    fams.push_back(monomial_family(5, 3, 1, false, 1, "p=5 m=3 k=1"));
    fams.push_back(monomial_family(5, 3, 2, false, 2, "p=5 m=3 k=2"));
    fams.push_back(monomial_family(5, 3, 3, false, 3, "p=5 m=3 k=3"));
    fams.push_back(fixed_family(
        5, 3, 5, false, 2,
        {{1, 0, FE{2, 1}}, {3, 1, FE{6, 0}}, {4, 2, FE{2, 0}}},
        "p=5 m=3 k=5"));
    fams.push_back(monomial_family(5, 4, 1, false, 1, "p=5 m=4 k=1"));
    fams.push_back(monomial_family(5, 4, 2, false, 2, "p=5 m=4 k=2"));
    fams.push_back(monomial_family(5, 4, 4, false, 4, "p=5 m=4 k=4"));
    fams.push_back(fixed_family(5, 4, 3, false, 2,
                                {{1, 0, FE{6, 0}}, {1, 1, FE{2, 0}}},
                                "p=5 m=4 k=3"));
    fams.push_back(fixed_family(
        5, 4, 5, false, 2,
        {{1, 0, FE{2, 1}}, {4, 1, FE{6, 0}}, {2, 2, FE{2, 0}}},
        "p=5 m=4 k=5"));
  } else {
    // For p > 5 every admissible (k, m, d) lands on the same monomial; the
    // k = 1 instance already realizes it for any kind.
    fams.push_back(monomial_family(p, -1, 1, false, 1,
                                   "p>5: the single monomial family"));
  }
  return fams;
}

long long family_k(const DOFamily& fam, int l) {
  long long k = fam.k0;
  if (fam.k_scales_by_p)
    for (int i = 0; i < l; ++i) k *= fam.p;
  return k;
}

std::optional<long long> family_d(const DOFamily& fam, int n, int alpha) {
  long long pn = 1;
  for (int i = 0; i < n; ++i) pn *= fam.p;
  if (!fam.alpha_free) return fam.d_base * pn;
  long long pa = 1;
  for (int i = 0; i < alpha; ++i) pa *= fam.p;
  long long num = pn * (pa + 1);
  if (num % fam.d_divisor != 0) return std::nullopt;
  return num / fam.d_divisor;
}

long long family_exponent(const DOFamily& fam, const FamilyExponent& fe, int n,
                          int l, int alpha) {
  long long v = fe.base;
  int ppow = n + fe.shift + (fam.k_scales_by_p ? l : 0);
  for (int i = 0; i < ppow; ++i) v *= fam.p;
  if (fe.times_palpha1) {
    long long pa = 1;
    for (int i = 0; i < alpha; ++i) pa *= fam.p;
    v *= pa + 1;
  }
  return v;
}

bool family_matches_dickson(const DOFamily& fam, int n, int l, int alpha) {
  auto d = family_d(fam, n, alpha);
  if (!d) return false;
  long long k = family_k(fam, l);
  long long m = fam.m_residue >= 0 ? fam.m_residue : 0;  // p>5 row: k=1, any m
  long long twist = 1;  // printed a-powers sit below the p^l Frobenius twist
  if (fam.k_scales_by_p)
    for (int i = 0; i < l; ++i) twist *= fam.p;

  std::map<long long, std::pair<long long, long long>> expected;  // exp -> (coeff, apow)
  for (const auto& t : fam.terms)
    expected[family_exponent(fam, t.exponent, n, l, alpha)] = {
        t.coeff, t.a_power * twist};

  std::map<long long, std::pair<long long, long long>> actual;
  for (const auto& [i, c] : reduced_terms(frak_d(k, m), fam.p))
    actual[(k - 2 * i) * *d] = {c, i};
  return expected == actual;
}

}  // namespace dopoly
