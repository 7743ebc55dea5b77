#pragma once

// Dembowski-Ostrom classification of the composed Dickson polynomials. A
// polynomial is DO when every monomial exponent is a sum of two powers of p;
// classify_do decides that directly from the symbolic coefficients, while
// theorem_predicate encodes the known parameter families per kind class
// (m mod p). The two must agree everywhere, and classify_sweep checks that on
// a finite grid. Neither depends on the extension degree e or on the value of
// a nonzero parameter a, since coefficients are integer multiples of powers
// of a.

#include <optional>
#include <string>
#include <vector>

#include "dopoly/dickson.hpp"

namespace dopoly {

struct PowerSumWitness {
  int i = 0;
  int j = 0;  // p^i + p^j == exponent, i <= j
};

// Smallest-i decomposition of n as p^i + p^j, if one exists.
std::optional<PowerSumWitness> is_p_power_sum(long long n, long long p);

struct DOVerdict {
  struct TermInfo {
    long long exponent;
    long long coeff_mod_p;  // in (0, p)
    int a_power;
    std::optional<PowerSumWitness> witness;
  };
  bool is_do = false;
  std::vector<TermInfo> surviving_terms;       // exponents descending
  std::optional<long long> offending_term;     // smallest undecomposable exp
};

// Builds frak D_{k,m}, reduces coefficients mod p, and tests every surviving
// exponent (k-2i)d. Depends only on (k, m mod p, d, p).
DOVerdict classify_do(long long k, long long m, long long d, long long p);
bool is_do(long long k, long long m, long long d, long long p);

struct FormWitness {
  int n = 0;
  int alpha = 0;
  int divisor = 1;  // p^n (p^alpha + 1) == divisor * d
};

// Any (n, alpha) with p^n(p^alpha+1) = divisor*d; divisor in {1,2,3,4}.
std::optional<FormWitness> form_witness(long long d, long long p, int divisor);

// True iff (k, m, d, p) lies in the union of the known DO parameter
// families, dispatching on p and m mod p.
bool theorem_predicate(long long k, long long m, long long d, long long p);

struct SweepRow {
  long long k = 0;
  long long m = 0;
  long long d = 0;
  bool observed_do = false;
  bool predicted_do = false;
  std::string witnesses;  // "e=p^i+p^j;..." or "offending=e"
  bool mismatch() const { return observed_do != predicted_do; }
};

struct SweepResult {
  long long p = 0;
  std::vector<SweepRow> mismatches;  // subset of rows, (k, m, d) order
  std::vector<SweepRow> rows;        // full grid, (k, m, d) order
};

SweepResult classify_sweep(long long p, long long k_max,
                           const std::vector<long long>& m_values,
                           long long d_max, unsigned jobs = 1);

// --- machine-encoded DO family table ---------------------------------------
//
// Each family fixes a base index k0 (optionally scaled by free powers of p),
// a shape for the admissible d, and the term list of the resulting
// polynomial. Exponents are base * p^{n + l + shift} (times p^alpha + 1 for
// the monomial families); printed a-powers refer to the parameter before the
// p^l Frobenius twist, so instantiation multiplies them by p^l.

struct FamilyExponent {
  long long base = 1;
  int shift = 0;               // extra fixed power of p
  bool times_palpha1 = false;  // multiply by (p^alpha + 1)
};

struct FamilyTerm {
  long long coeff = 1;  // integer in (0, p)
  int a_power = 0;
  FamilyExponent exponent;
};

struct DOFamily {
  long long p = 0;
  long long m_residue = 0;  // class of m mod p
  long long k0 = 1;
  bool k_scales_by_p = false;  // k = k0 * p^l with l free
  bool alpha_free = false;     // d = p^n (p^alpha + 1) / d_divisor
  int d_divisor = 1;
  long long d_base = 1;  // d = d_base * p^n when !alpha_free
  std::vector<FamilyTerm> terms;
  std::string label;
};

std::vector<DOFamily> appendix_table(long long p);

long long family_k(const DOFamily& fam, int l);
// d at (n, alpha); nullopt when the division does not come out an integer.
std::optional<long long> family_d(const DOFamily& fam, int n, int alpha);
// Exponent value of one printed term at parameters (n, l, alpha).
long long family_exponent(const DOFamily& fam, const FamilyExponent& fe, int n,
                          int l, int alpha);
// True iff instantiating frak D_{k,m} at the family's parameters reproduces
// the printed terms coefficient-for-coefficient mod p.
bool family_matches_dickson(const DOFamily& fam, int n, int l, int alpha);

}  // namespace dopoly
