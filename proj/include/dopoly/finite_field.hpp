#pragma once

// Exact arithmetic in F_p and F_{p^e} for odd p. Elements are dense
// coordinate vectors over F_p relative to a monic irreducible modulus, and
// everything is sized for desk scale (e <= 10). A constructed Field never
// mutates, so it can be shared freely across parallel workers; elements are
// plain values.

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dopoly/errors.hpp"

namespace dopoly {

inline constexpr int kMaxExtensionDegree = 10;

class Field;

class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const;
  bool has_field() const { return field_ != nullptr; }
  int coord_count() const { return e_; }
  std::span<const std::int32_t> coords() const {
    return {c_.data(), static_cast<std::size_t>(e_)};
  }
  std::int32_t coord(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);

  // Elements compare equal iff they live in the same field (by value) and
  // have identical coordinate vectors; the representation is canonical.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  friend class Field;
  const Field* field_ = nullptr;
  std::int16_t e_ = 0;
  std::array<std::int32_t, kMaxExtensionDegree> c_{};
};

class Field {
 public:
  // Throws NotPrimeError / EvenCharacteristicError / ReducibleModulusError.
  // When no modulus is given, the lexicographically smallest monic
  // irreducible of degree e is chosen (coefficients compared
  // low-degree-first), so construction is reproducible.
  Field(long long p, int e,
        std::optional<std::vector<long long>> modulus = std::nullopt);

  // Elements keep plain pointers to their field.
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  long long characteristic() const { return p_; }
  int extension_degree() const { return e_; }
  std::uint64_t size() const { return q_; }
  const std::vector<std::int32_t>& modulus() const { return modulus_; }
  bool modulus_supplied() const { return modulus_supplied_; }
  bool same_field(const Field& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(long long n) const;
  FieldElement from_coords(std::span<const long long> coords) const;

  // Canonical order: lexicographic in (c0, c1, ..., c_{e-1}), c0 first.
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;  // DivisionByZeroError on 0
  // x^0 == 1, including 0^0 == 1, so polynomial evaluation at 0 picks up
  // constant terms only.
  FieldElement pow(const FieldElement& x, unsigned long long n) const;

  // Smallest generator in canonical order, except that a caller-supplied
  // primitive modulus yields the class of the modulus variable itself.
  // Computed once on first use; safe under concurrent access.
  const FieldElement& generator() const;

  std::string description() const;  // "3^4/x^4+2x^3+2"
  std::string element_to_string(const FieldElement& x) const;  // "(c0,...,c_{e-1})"
  // Accepts "(c0,c1,...)" tuples, plain integers, and generator powers "g^k".
  FieldElement parse_element(const std::string& s) const;

  class ElementIterator {
   public:
    ElementIterator(const Field* f, std::uint64_t i) : field_(f), index_(i) {}
    FieldElement operator*() const { return field_->element_at(index_); }
    ElementIterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator!=(const ElementIterator& o) const {
      return index_ != o.index_;
    }

   private:
    const Field* field_;
    std::uint64_t index_;
  };

  class ElementRange {
   public:
    ElementRange(const Field* f, std::uint64_t b, std::uint64_t e)
        : field_(f), begin_(b), end_(e) {}
    ElementIterator begin() const { return {field_, begin_}; }
    ElementIterator end() const { return {field_, end_}; }

   private:
    const Field* field_;
    std::uint64_t begin_;
    std::uint64_t end_;
  };

  // All q elements, zero first, then by coordinate order.
  ElementRange elements() const { return {this, 0, q_}; }
  // The q-1 nonzero elements in canonical order.
  ElementRange nonzero_elements() const { return {this, 1, q_}; }

 private:
  FieldElement compute_generator() const;
  void check_member(const FieldElement& x, const char* op) const;

  long long p_ = 0;
  int e_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::int32_t> modulus_;        // monic, length e+1
  std::vector<std::int32_t> top_reduction_;  // x^e rewritten in lower coords
  std::vector<std::uint64_t> place_value_;   // p^{e-1-i} for canonical index
  bool modulus_supplied_ = false;
  mutable std::once_flag generator_once_;
  mutable FieldElement generator_;
};

Field make_field(long long p, int e,
                 std::optional<std::vector<long long>> modulus = std::nullopt);
// Parses a field description string, e.g. "3^4/x^4+2x^3+2", "5^2", "7".
Field make_field(const std::string& description);

// The parsed pieces of a field description; lets non-movable Fields be
// constructed in place from a string.
struct FieldDescription {
  long long p = 0;
  int e = 1;
  std::optional<std::vector<long long>> modulus;
};
FieldDescription parse_field_description(const std::string& description);

FieldElement find_generator(const Field& field);

// True iff x = y^k for some nonzero y; decided by x^((q-1)/gcd(k,q-1)) == 1.
bool is_kth_power(const FieldElement& x, unsigned long long k);

// Discrete log base the field generator; plain scan, exactness over speed.
std::uint64_t dlog(const Field& field, const FieldElement& x);
std::uint64_t dlog(const FieldElement& x);

std::vector<FieldElement> enumerate_field(const Field& field);

// Distinct prime factors by trial division; q-1 stays well inside 64 bits
// at the field sizes this library supports.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

bool is_prime(long long n);

}  // namespace dopoly
