#include "dopoly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dopoly {

namespace {

void check_same_field(const Field& a, const Field& b, const char* op) {
  if (!a.same_field(b))
    throw FieldMismatchError(std::string(op) + ": polynomials over " +
                             a.description() + " and " + b.description());
}

}  // namespace

// ---------------------------------------------------------------------------
// SparsePoly

std::optional<long long> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

FieldElement SparsePoly::coeff(long long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? field_->zero() : it->second;
}

void SparsePoly::add_term(long long exponent, const FieldElement& c) {
  if (exponent < 0) throw Error("negative exponent");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.field_->same_field(*b.field_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// BivariatePoly

long long BivariatePoly::total_degree() const {
  long long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

FieldElement BivariatePoly::coeff(long long xexp, long long yexp) const {
  auto it = terms_.find({xexp, yexp});
  return it == terms_.end() ? field_->zero() : it->second;
}

void BivariatePoly::add_term(long long xexp, long long yexp,
                             const FieldElement& c) {
  if (xexp < 0 || yexp < 0) throw Error("negative exponent");
  if (c.is_zero()) return;
  auto key = std::make_pair(xexp, yexp);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
  return a.field_->same_field(*b.field_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// ParametricPoly

bool ParametricPoly::has_parameter() const {
  for (const auto& [key, c] : terms_)
    if (key.second > 0) return true;
  return false;
}

void ParametricPoly::add_term(long long exponent, int a_power,
                              const FieldElement& c) {
  if (exponent < 0 || a_power < 0) throw Error("negative exponent");
  if (c.is_zero()) return;
  auto key = std::make_pair(exponent, a_power);
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly ParametricPoly::bind(const FieldElement& a) const {
  SparsePoly out(*field_);
  for (const auto& [key, c] : terms_)
    out.add_term(key.first,
                 field_->mul(c, field_->pow(a, static_cast<unsigned long long>(
                                                   key.second))));
  return out;
}

SparsePoly ParametricPoly::bind_constant() const {
  if (has_parameter())
    throw UnboundParameterError(
        "polynomial mentions 'a' but no value was supplied");
  SparsePoly out(*field_);
  for (const auto& [key, c] : terms_) out.add_term(key.first, c);
  return out;
}

// ---------------------------------------------------------------------------
// arithmetic

FieldElement eval(const SparsePoly& f, const FieldElement& x) {
  const Field& F = f.field();
  FieldElement acc = F.zero();
  for (const auto& [k, c] : f.terms())
    acc += c * F.pow(x, static_cast<unsigned long long>(k));
  return acc;
}

FieldElement eval(const BivariatePoly& h, const FieldElement& x,
                  const FieldElement& y) {
  const Field& F = h.field();
  FieldElement acc = F.zero();
  for (const auto& [e, c] : h.terms())
    acc += c * F.pow(x, static_cast<unsigned long long>(e.first)) *
           F.pow(y, static_cast<unsigned long long>(e.second));
  return acc;
}

SparsePoly add(const SparsePoly& f, const SparsePoly& g) {
  check_same_field(f.field(), g.field(), "add");
  SparsePoly out = f;
  for (const auto& [k, c] : g.terms()) out.add_term(k, c);
  return out;
}

SparsePoly sub(const SparsePoly& f, const SparsePoly& g) {
  check_same_field(f.field(), g.field(), "sub");
  SparsePoly out = f;
  for (const auto& [k, c] : g.terms()) out.add_term(k, -c);
  return out;
}

SparsePoly mul(const SparsePoly& f, const SparsePoly& g) {
  check_same_field(f.field(), g.field(), "mul");
  SparsePoly out(f.field());
  for (const auto& [k1, c1] : f.terms())
    for (const auto& [k2, c2] : g.terms()) out.add_term(k1 + k2, c1 * c2);
  return out;
}

SparsePoly scale(const SparsePoly& f, const FieldElement& c) {
  SparsePoly out(f.field());
  for (const auto& [k, v] : f.terms()) out.add_term(k, v * c);
  return out;
}

SparsePoly compose_monomial(const SparsePoly& f, long long d) {
  if (d < 1) throw Error("compose_monomial requires d >= 1");
  SparsePoly out(f.field());
  for (const auto& [k, c] : f.terms()) out.add_term(k * d, c);
  return out;
}

SparsePoly reduce_mod_field(const SparsePoly& f) {
  const auto q = static_cast<long long>(f.field().size());
  SparsePoly out(f.field());
  for (const auto& [k, c] : f.terms())
    out.add_term(k == 0 ? 0 : (k - 1) % (q - 1) + 1, c);
  return out;
}

BivariatePoly delta_bivariate(const SparsePoly& f) {
  const Field& F = f.field();
  BivariatePoly out(F);
  if (f.is_zero()) return out;
  // One Pascal row walk mod p covers every term exponent; terms() is sorted
  // ascending so the row only ever advances.
  const long long p = F.characteristic();
  std::vector<long long> row{1};
  long long r = 0;
  for (const auto& [k, c] : f.terms()) {
    while (r < k) {
      row.push_back(0);
      for (auto j = static_cast<long long>(row.size()) - 1; j >= 1; --j)
        row[static_cast<std::size_t>(j)] =
            (row[static_cast<std::size_t>(j)] +
             row[static_cast<std::size_t>(j - 1)]) %
            p;
      ++r;
    }
    if (k == 0) {
      out.add_term(0, 0, -c);  // constant contributes c - c - c
      continue;
    }
    for (long long j = 1; j < k; ++j) {
      long long b = row[static_cast<std::size_t>(j)];
      if (b == 0) continue;
      out.add_term(j, k - j, c * F.from_integer(b));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// parsing and printing

namespace {

struct TermParser {
  const std::string& s;
  const Field& F;
  bool allow_y;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool done() {
    skip_ws();
    return i >= s.size();
  }

  [[noreturn]] void fail(const std::string& why) {
    throw SyntaxError(why + " at position " + std::to_string(i) + " in '" + s +
                      "'");
  }

  long long integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  }

  long long exponent_suffix() {
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      long long e = integer();
      if (e < 0) fail("negative exponent");
      return e;
    }
    return 1;
  }

  FieldElement tuple() {
    ++i;  // '('
    std::vector<long long> coords;
    while (true) {
      coords.push_back(integer());
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    skip_ws();
    if (i >= s.size() || s[i] != ')') fail("unterminated coordinate tuple");
    ++i;
    return F.from_coords(coords);
  }

  // key: (x exponent, y exponent, a power) -> coefficient
  std::map<std::tuple<long long, long long, int>, FieldElement> parse() {
    std::map<std::tuple<long long, long long, int>, FieldElement> acc;
    skip_ws();
    if (i >= s.size()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      skip_ws();
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      FieldElement coeff = sign < 0 ? -F.one() : F.one();
      long long xexp = 0, yexp = 0;
      int apow = 0;
      bool saw_factor = false;
      while (true) {
        skip_ws();
        if (i >= s.size()) break;
        char ch = s[i];
        if (ch == '*') {
          ++i;
          continue;
        }
        if (ch == '+' || ch == '-') break;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          coeff *= F.from_integer(integer());
        } else if (ch == '(') {
          coeff *= tuple();
        } else if (ch == 'a' || ch == 'A') {
          ++i;
          apow += static_cast<int>(exponent_suffix());
        } else if (ch == 'x' || ch == 'X') {
          ++i;
          xexp += exponent_suffix();
        } else if ((ch == 'y' || ch == 'Y') && allow_y) {
          ++i;
          yexp += exponent_suffix();
        } else {
          fail(std::string("unexpected character '") + ch + "'");
        }
        saw_factor = true;
      }
      if (!saw_factor) fail("empty term");
      if (coeff.is_zero()) continue;
      auto key = std::make_tuple(xexp, yexp, apow);
      auto [it, inserted] = acc.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
    return acc;
  }
};

}  // namespace

ParametricPoly parse_parametric(const std::string& s, const Field& field) {
  TermParser tp{s, field, /*allow_y=*/false};
  ParametricPoly out(field);
  for (const auto& [key, c] : tp.parse())
    out.add_term(std::get<0>(key), std::get<2>(key), c);
  return out;
}

SparsePoly parse_poly(const std::string& s, const Field& field,
                      std::optional<FieldElement> a) {
  ParametricPoly pp = parse_parametric(s, field);
  return a.has_value() ? pp.bind(*a) : pp.bind_constant();
}

BivariatePoly parse_bivariate(const std::string& s, const Field& field,
                              std::optional<FieldElement> a) {
  TermParser tp{s, field, /*allow_y=*/true};
  BivariatePoly out(field);
  for (const auto& [key, c] : tp.parse()) {
    int apow = std::get<2>(key);
    FieldElement coeff = c;
    if (apow > 0) {
      if (!a.has_value())
        throw UnboundParameterError(
            "polynomial mentions 'a' but no value was supplied");
      coeff = field.mul(
          coeff, field.pow(*a, static_cast<unsigned long long>(apow)));
    }
    out.add_term(std::get<0>(key), std::get<1>(key), coeff);
  }
  return out;
}

namespace {

// Constants with a single nonzero coordinate in position 0 print as plain
// integers; everything else prints as a tuple.
std::string coeff_string(const Field& F, const FieldElement& c) {
  bool constant_like = true;
  for (int i = 1; i < F.extension_degree(); ++i)
    if (c.coord(i) != 0) constant_like = false;
  if (constant_like) return std::to_string(c.coord(0));
  return F.element_to_string(c);
}

std::string monomial_string(const Field& F, const FieldElement& c,
                            const std::string& vars) {
  if (vars.empty()) return coeff_string(F, c);
  if (c == F.one()) return vars;
  return coeff_string(F, c) + "*" + vars;
}

std::string var_power(const char* v, long long e) {
  if (e == 0) return "";
  std::string out = v;
  if (e > 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace

std::string format_poly(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << monomial_string(f.field(), it->second, var_power("x", it->first));
  }
  return os.str();
}

std::string format_poly(const BivariatePoly& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    std::string vars = var_power("x", it->first.first);
    std::string ypart = var_power("y", it->first.second);
    if (!vars.empty() && !ypart.empty()) vars += "*";
    vars += ypart;
    os << monomial_string(h.field(), it->second, vars);
  }
  return os.str();
}

}  // namespace dopoly
