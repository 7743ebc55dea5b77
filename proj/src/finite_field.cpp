#include "dopoly/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dopoly {

namespace {

long long mod_into(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

// --- dense polynomials over F_p, little-endian; only used for modulus
// --- selection and the irreducibility check -------------------------------

using PPoly = std::vector<long long>;

int pdeg(const PPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void ptrim(PPoly& f) { f.resize(static_cast<std::size_t>(pdeg(f) + 1)); }

long long inv_mod_prime(long long a, long long p) {
  // extended Euclid; a nonzero mod p
  long long t = 0, new_t = 1, r = p, new_r = mod_into(a, p);
  while (new_r != 0) {
    long long qq = r / new_r;
    t = std::exchange(new_t, t - qq * new_t);
    r = std::exchange(new_r, r - qq * new_r);
  }
  return mod_into(t, p);
}

// a*b mod f, with f monic of degree e.
PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& f, long long p) {
  int e = pdeg(f);
  if (a.empty() || b.empty()) return {};
  std::vector<long long> t(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      t[i + j] = (t[i + j] + a[i] * b[j]) % p;
  }
  for (int d = static_cast<int>(t.size()) - 1; d >= e; --d) {
    long long c = t[static_cast<std::size_t>(d)] % p;
    if (c == 0) continue;
    t[static_cast<std::size_t>(d)] = 0;
    for (int j = 0; j < e; ++j) {
      auto idx = static_cast<std::size_t>(d - e + j);
      t[idx] = (t[idx] + c * (p - f[static_cast<std::size_t>(j)])) % p;
    }
  }
  t.resize(static_cast<std::size_t>(e));
  ptrim(t);
  return t;
}

PPoly ppow(PPoly base, unsigned long long n, const PPoly& f, long long p) {
  PPoly r{1};
  while (n > 0) {
    if (n & 1) r = pmul_mod(r, base, f, p);
    base = pmul_mod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, long long p) {
  ptrim(a);
  ptrim(b);
  while (pdeg(b) >= 0) {
    // reduce a mod b
    long long lead_inv = inv_mod_prime(b[static_cast<std::size_t>(pdeg(b))], p);
    while (pdeg(a) >= pdeg(b)) {
      int shift = pdeg(a) - pdeg(b);
      long long c = a[static_cast<std::size_t>(pdeg(a))] * lead_inv % p;
      for (int j = 0; j <= pdeg(b); ++j) {
        auto idx = static_cast<std::size_t>(j + shift);
        a[idx] = mod_into(a[idx] - c * b[static_cast<std::size_t>(j)], p);
      }
      ptrim(a);
      if (pdeg(a) < 0) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Monic degree-e f is irreducible iff it shares no factor with Y^{p^i} - Y
// for i = 1..e/2 (that product covers every irreducible of degree <= e/2).
bool irreducible_mod_p(const PPoly& f, long long p) {
  int e = pdeg(f);
  if (e <= 0) return false;
  if (e == 1) return true;
  PPoly r{0, 1};  // Y
  for (int i = 1; i <= e / 2; ++i) {
    r = ppow(r, static_cast<unsigned long long>(p), f, p);  // Y^{p^i} mod f
    PPoly t = r;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = mod_into(t[1] - 1, p);
    ptrim(t);
    PPoly g = pgcd(t, f, p);
    if (pdeg(g) > 0) return false;
  }
  return true;
}

bool has_root_mod_p(const PPoly& f, long long p) {
  for (long long t = 0; t < p; ++t) {
    long long acc = 0;
    for (int i = pdeg(f); i >= 0; --i)
      acc = (acc * t + f[static_cast<std::size_t>(i)]) % p;
    if (acc == 0) return true;
  }
  return false;
}

std::uint64_t checked_pow_u64(long long p, int e) {
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > UINT64_MAX / static_cast<std::uint64_t>(p))
      throw FieldTooLargeError("p^e does not fit in 64 bits");
    q *= static_cast<std::uint64_t>(p);
  }
  return q;
}

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long long parse_ll(const std::string& s, std::size_t& i, const char* what) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == digits)
    throw SyntaxError(std::string("expected integer for ") + what + " in '" +
                      s + "'");
  return std::stoll(s.substr(start, i - start));
}

// Modulus strings: integer-coefficient polynomials in x, e.g. "x^4+2x^3+2".
std::vector<long long> parse_int_poly(const std::string& s) {
  std::vector<long long> coeffs;
  auto put = [&](long long exp, long long c) {
    if (exp < 0) throw SyntaxError("negative exponent in '" + s + "'");
    if (coeffs.size() <= static_cast<std::size_t>(exp))
      coeffs.resize(static_cast<std::size_t>(exp) + 1, 0);
    coeffs[static_cast<std::size_t>(exp)] += c;
  };
  std::size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) throw SyntaxError("empty polynomial string");
  while (i < s.size()) {
    long long sign = 1;
    skip_ws(s, i);
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws(s, i);
    }
    long long coeff = 1;
    bool saw_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_ll(s, i, "coefficient");
      saw_coeff = true;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws(s, i);
      }
    }
    long long exp = 0;
    if (i < s.size() &&
        (s[i] == 'x' || s[i] == 'X' || s[i] == 'y' || s[i] == 'Y')) {
      ++i;
      exp = 1;
      skip_ws(s, i);
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = parse_ll(s, i, "exponent");
      }
    } else if (!saw_coeff) {
      throw SyntaxError("unexpected character '" + std::string(1, s[i]) +
                        "' in '" + s + "'");
    }
    put(exp, sign * coeff);
    skip_ws(s, i);
  }
  return coeffs;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// ---------------------------------------------------------------------------
// FieldElement

const Field& FieldElement::field() const {
  if (!field_) throw Error("element has no field attached");
  return *field_;
}

bool FieldElement::is_zero() const {
  for (int i = 0; i < e_; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ == nullptr || b.field_ == nullptr)
    return a.field_ == b.field_;
  if (a.field_ != b.field_ && !a.field_->same_field(*b.field_)) return false;
  if (a.e_ != b.e_) return false;
  for (int i = 0; i < a.e_; ++i)
    if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)])
      return false;
  return true;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return field().add(*this, o);
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return field().sub(*this, o);
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return field().mul(*this, o);
}
FieldElement FieldElement::operator-() const { return field().neg(*this); }
FieldElement& FieldElement::operator+=(const FieldElement& o) {
  return *this = field().add(*this, o);
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
  return *this = field().sub(*this, o);
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
  return *this = field().mul(*this, o);
}

// ---------------------------------------------------------------------------
// Field

Field::Field(long long p, int e, std::optional<std::vector<long long>> modulus)
    : p_(p), e_(e) {
  if (p == 2)
    throw EvenCharacteristicError(
        "characteristic 2 is rejected; this library targets odd p");
  if (!is_prime(p))
    throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error("extension degree must be >= 1");
  if (e > kMaxExtensionDegree)
    throw FieldTooLargeError("extension degree above supported bound " +
                             std::to_string(kMaxExtensionDegree));
  q_ = checked_pow_u64(p, e);

  PPoly mod;
  if (modulus.has_value()) {
    if (modulus->size() != static_cast<std::size_t>(e) + 1)
      throw Error("modulus must list e+1 coefficients, low degree first");
    mod.resize(modulus->size());
    for (std::size_t i = 0; i < modulus->size(); ++i)
      mod[i] = mod_into((*modulus)[i], p);
    if (mod[static_cast<std::size_t>(e)] != 1)
      throw Error("modulus must be monic of degree e");
    if (!irreducible_mod_p(mod, p))
      throw ReducibleModulusError("supplied modulus factors over F_" +
                                  std::to_string(p));
    modulus_supplied_ = true;
  } else if (e == 1) {
    mod = {0, 1};  // Y itself: the smallest monic degree-1 polynomial
  } else {
    // Lexicographically smallest monic irreducible, low-degree coefficients
    // compared first. Everything with constant term 0 is divisible by Y, so
    // the scan starts at (1, 0, ..., 0).
    std::uint64_t top = checked_pow_u64(p, e - 1);
    bool found = false;
    for (std::uint64_t j = top; j < q_ && !found; ++j) {
      PPoly cand(static_cast<std::size_t>(e) + 1, 0);
      cand[static_cast<std::size_t>(e)] = 1;
      std::uint64_t rest = j;
      for (int i = e - 1; i >= 0; --i) {
        cand[static_cast<std::size_t>(e - 1 - i)] =
            static_cast<long long>(rest / (i == 0 ? 1 : checked_pow_u64(p, i)));
        rest %= (i == 0 ? 1 : checked_pow_u64(p, i));
      }
      if (has_root_mod_p(cand, p)) continue;
      if (irreducible_mod_p(cand, p)) {
        mod = cand;
        found = true;
      }
    }
    if (!found) throw Error("no irreducible modulus found");  // cannot happen
  }

  modulus_.assign(mod.begin(), mod.end());
  modulus_.resize(static_cast<std::size_t>(e) + 1, 0);
  top_reduction_.resize(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i)
    top_reduction_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(
        mod_into(-static_cast<long long>(modulus_[static_cast<std::size_t>(i)]),
                 p));
  place_value_.resize(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i)
    place_value_[static_cast<std::size_t>(i)] = checked_pow_u64(p, e - 1 - i);
}

bool Field::same_field(const Field& other) const {
  return this == &other ||
         (p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_);
}

void Field::check_member(const FieldElement& x, const char* op) const {
  if (x.field_ == nullptr || !(x.field_ == this || x.field_->same_field(*this)))
    throw FieldMismatchError(std::string(op) +
                             ": operand does not belong to " + description());
}

FieldElement Field::zero() const {
  FieldElement r;
  r.field_ = this;
  r.e_ = static_cast<std::int16_t>(e_);
  return r;
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long n) const {
  FieldElement r = zero();
  r.c_[0] = static_cast<std::int32_t>(mod_into(n, p_));
  return r;
}

FieldElement Field::from_coords(std::span<const long long> coords) const {
  if (coords.size() > static_cast<std::size_t>(e_))
    throw Error("coordinate vector longer than extension degree");
  FieldElement r = zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    r.c_[i] = static_cast<std::int32_t>(mod_into(coords[i], p_));
  return r;
}

FieldElement Field::element_at(std::uint64_t index) const {
  if (index >= q_) throw Error("element index out of range");
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    r.c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(
        index / place_value_[static_cast<std::size_t>(i)]);
    index %= place_value_[static_cast<std::size_t>(i)];
  }
  return r;
}

std::uint64_t Field::index_of(const FieldElement& x) const {
  check_member(x, "index_of");
  std::uint64_t idx = 0;
  for (int i = 0; i < e_; ++i)
    idx += static_cast<std::uint64_t>(x.c_[static_cast<std::size_t>(i)]) *
           place_value_[static_cast<std::size_t>(i)];
  return idx;
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  check_member(x, "add");
  check_member(y, "add");
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    std::int32_t v = x.c_[static_cast<std::size_t>(i)] +
                     y.c_[static_cast<std::size_t>(i)];
    if (v >= p_) v -= static_cast<std::int32_t>(p_);
    r.c_[static_cast<std::size_t>(i)] = v;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  check_member(x, "sub");
  check_member(y, "sub");
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    std::int32_t v = x.c_[static_cast<std::size_t>(i)] -
                     y.c_[static_cast<std::size_t>(i)];
    if (v < 0) v += static_cast<std::int32_t>(p_);
    r.c_[static_cast<std::size_t>(i)] = v;
  }
  return r;
}

FieldElement Field::neg(const FieldElement& x) const {
  check_member(x, "neg");
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i) {
    std::int32_t v = x.c_[static_cast<std::size_t>(i)];
    r.c_[static_cast<std::size_t>(i)] =
        v == 0 ? 0 : static_cast<std::int32_t>(p_) - v;
  }
  return r;
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  check_member(x, "mul");
  check_member(y, "mul");
  std::array<long long, 2 * kMaxExtensionDegree - 1> t{};
  for (int i = 0; i < e_; ++i) {
    long long xi = x.c_[static_cast<std::size_t>(i)];
    if (xi == 0) continue;
    for (int j = 0; j < e_; ++j)
      t[static_cast<std::size_t>(i + j)] +=
          xi * y.c_[static_cast<std::size_t>(j)];
  }
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    long long c = t[static_cast<std::size_t>(d)] % p_;
    if (c == 0) continue;
    for (int j = 0; j < e_; ++j)
      t[static_cast<std::size_t>(d - e_ + j)] +=
          c * top_reduction_[static_cast<std::size_t>(j)];
  }
  FieldElement r = zero();
  for (int i = 0; i < e_; ++i)
    r.c_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(
        mod_into(t[static_cast<std::size_t>(i)], p_));
  return r;
}

FieldElement Field::pow(const FieldElement& x, unsigned long long n) const {
  check_member(x, "pow");
  FieldElement acc = one();
  FieldElement base = x;
  while (n > 0) {
    if (n & 1) acc = mul(acc, base);
    base = mul(base, base);
    n >>= 1;
  }
  return acc;
}

FieldElement Field::inv(const FieldElement& x) const {
  check_member(x, "inv");
  if (x.is_zero()) throw DivisionByZeroError("inverse of zero");
  return pow(x, q_ - 2);
}

FieldElement Field::compute_generator() const {
  const auto primes = distinct_prime_factors(q_ - 1);
  auto has_full_order = [&](const FieldElement& x) {
    if (x.is_zero()) return false;
    for (auto r : primes)
      if (pow(x, (q_ - 1) / r) == one()) return false;
    return true;
  };
  if (modulus_supplied_) {
    // Class of the modulus variable; for a primitive modulus this is the
    // generator callers expect.
    FieldElement y = zero();
    if (e_ >= 2) {
      y.c_[1] = 1;
    } else {
      y = from_integer(-static_cast<long long>(modulus_[0]));
    }
    if (has_full_order(y)) return y;
  }
  for (std::uint64_t i = 1; i < q_; ++i) {
    FieldElement x = element_at(i);
    if (has_full_order(x)) return x;
  }
  throw Error("no generator found");  // unreachable: F_q^* is cyclic
}

const FieldElement& Field::generator() const {
  std::call_once(generator_once_, [this] { generator_ = compute_generator(); });
  return generator_;
}

std::string Field::description() const {
  std::ostringstream os;
  os << p_ << "^" << e_ << "/";
  bool first = true;
  for (int k = e_; k >= 0; --k) {
    long long c = modulus_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string Field::element_to_string(const FieldElement& x) const {
  check_member(x, "element_to_string");
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < e_; ++i) {
    if (i > 0) os << ",";
    os << x.c_[static_cast<std::size_t>(i)];
  }
  os << ")";
  return os.str();
}

FieldElement Field::parse_element(const std::string& s) const {
  std::size_t i = 0;
  skip_ws(s, i);
  if (i == s.size()) throw SyntaxError("empty element string");
  if (s[i] == '(') {
    ++i;
    std::vector<long long> coords;
    while (true) {
      coords.push_back(parse_ll(s, i, "coordinate"));
      skip_ws(s, i);
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= s.size() || s[i] != ')')
      throw SyntaxError("unterminated coordinate tuple in '" + s + "'");
    ++i;
    skip_ws(s, i);
    if (i != s.size()) throw SyntaxError("trailing input in '" + s + "'");
    return from_coords(coords);
  }
  if (s[i] == 'g' || s[i] == 'G') {
    ++i;
    unsigned long long k = 1;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      long long v = parse_ll(s, i, "generator power");
      if (v < 0) throw SyntaxError("generator power must be >= 0");
      k = static_cast<unsigned long long>(v);
    } else if (i != s.size()) {
      throw SyntaxError("trailing input in '" + s + "'");
    }
    if (k == 1) return generator();
    return pow(generator(), k);
  }
  long long v = parse_ll(s, i, "element");
  skip_ws(s, i);
  if (i != s.size()) throw SyntaxError("trailing input in '" + s + "'");
  return from_integer(v);
}

// ---------------------------------------------------------------------------
// free functions

Field make_field(long long p, int e,
                 std::optional<std::vector<long long>> modulus) {
  return Field(p, e, std::move(modulus));
}

FieldDescription parse_field_description(const std::string& description) {
  FieldDescription out;
  auto slash = description.find('/');
  std::string head = description.substr(0, slash);
  std::size_t i = 0;
  out.p = parse_ll(head, i, "characteristic");
  long long e = 1;
  skip_ws(head, i);
  if (i < head.size() && head[i] == '^') {
    ++i;
    e = parse_ll(head, i, "extension degree");
  }
  skip_ws(head, i);
  if (i != head.size())
    throw SyntaxError("trailing input in field description '" + description +
                      "'");
  out.e = static_cast<int>(e);
  if (slash != std::string::npos)
    out.modulus = parse_int_poly(description.substr(slash + 1));
  return out;
}

Field make_field(const std::string& description) {
  auto fd = parse_field_description(description);
  return Field(fd.p, fd.e, std::move(fd.modulus));
}

FieldElement find_generator(const Field& field) { return field.generator(); }

bool is_kth_power(const FieldElement& x, unsigned long long k) {
  if (k < 1) throw Error("is_kth_power requires k >= 1");
  const Field& F = x.field();
  if (x.is_zero()) throw ZeroInputError("is_kth_power of zero");
  std::uint64_t g = std::gcd(static_cast<std::uint64_t>(k), F.size() - 1);
  return F.pow(x, (F.size() - 1) / g) == F.one();
}

std::uint64_t dlog(const Field& field, const FieldElement& x) {
  if (x.is_zero()) throw ZeroInputError("dlog of zero");
  const FieldElement g = field.generator();
  FieldElement acc = field.one();
  for (std::uint64_t t = 0; t + 1 < field.size(); ++t) {
    if (acc == x) return t;
    acc = field.mul(acc, g);
  }
  throw Error("dlog: element not generated");  // unreachable for x != 0
}

std::uint64_t dlog(const FieldElement& x) { return dlog(x.field(), x); }

std::vector<FieldElement> enumerate_field(const Field& field) {
  std::vector<FieldElement> out;
  out.reserve(field.size());
  for (std::uint64_t i = 0; i < field.size(); ++i)
    out.push_back(field.element_at(i));
  return out;
}

}  // namespace dopoly
