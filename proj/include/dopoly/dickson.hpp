#pragma once

// Dickson polynomials of arbitrary kind, kept symbolic over the integers. The
// (m+1)-th kind combines the first two kinds, D and E, which share the
// recurrence f_k = X f_{k-1} - a f_{k-2} with starts D_0 = 2, E_0 = 1,
// D_1 = E_1 = X. Coefficients stay exact; they are reduced mod p only when a
// polynomial is instantiated over a concrete field, so one symbolic object
// serves every characteristic (and m enters linearly, which is what makes
// the kind periodic mod p).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dopoly/polynomial.hpp"

namespace dopoly {

struct DicksonSpec {
  long long k = 0;
  long long m = 0;
  long long d = 1;
  std::optional<long long> p;
  std::optional<std::string> a;  // element string, bound against a field later
};

// "k=5,m=2,d=2,p=3,a=g^7"; d, p, a are optional.
DicksonSpec parse_dickson_spec(const std::string& s);

class SymbolicDicksonPoly {
 public:
  struct Term {
    int index;           // i: the term is coeff * a^i * X^{(k-2i) d}
    long long coeff;     // exact integer, sign included
    long long exponent;  // k - 2i
  };

  SymbolicDicksonPoly(long long k, long long m, bool constant_stripped,
                      std::vector<Term> terms)
      : k_(k), m_(m), stripped_(constant_stripped), terms_(std::move(terms)) {}

  long long k() const { return k_; }
  long long m() const { return m_; }
  bool constant_stripped() const { return stripped_; }
  // Every index 0..bound, zero coefficients included.
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term> nonzero_terms() const;

 private:
  long long k_;
  long long m_;
  bool stripped_;
  std::vector<Term> terms_;
};

// Full D_{k,m}(X, a), constant term included (k = 0 gives the constant 2-m).
SymbolicDicksonPoly dickson_symbolic(long long k, long long m);

// D_{k,m}(X^d, a) - D_{k,m}(0, a): the constant is dropped, the index sum
// stops at floor((k-1)/2). Requires k >= 1 (InvalidKError otherwise).
SymbolicDicksonPoly frak_d(long long k, long long m);

// Coefficients reduced mod p, vanished terms dropped: (index, coeff in [0,p)).
std::vector<std::pair<int, long long>> reduced_terms(
    const SymbolicDicksonPoly& sym, long long p);

// Concrete polynomial over a field: sum of (c_i mod p) a^i X^{(k-2i) d}.
SparsePoly instantiate(const SymbolicDicksonPoly& sym, const Field& field,
                       const FieldElement& a, long long d);

// Integer-coefficient display, e.g. "x^10 - 6*a*x^8 + 7*a^2*x^6 + ...".
std::string format_symbolic(const SymbolicDicksonPoly& sym, long long d = 1);

}  // namespace dopoly
