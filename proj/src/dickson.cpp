#include "dopoly/dickson.hpp"

#include <cctype>
#include <sstream>

namespace dopoly {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error("Dickson coefficient overflow; k or m out of supported range");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error("Dickson coefficient overflow; k or m out of supported range");
  return r;
}

// Signed coefficient rows of one kind: row[i] multiplies a^i X^{k-2i}.
std::vector<long long> kind_row(long long k, bool second_kind) {
  std::vector<long long> prev{second_kind ? 1LL : 2LL};  // degree 0
  if (k == 0) return prev;
  std::vector<long long> cur{1};  // degree 1: X
  for (long long deg = 2; deg <= k; ++deg) {
    std::vector<long long> next(static_cast<std::size_t>(deg / 2) + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[i + 1] = checked_sub(next[i + 1], prev[i]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

long long mod_into(long long v, long long p) {
  long long r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

std::vector<SymbolicDicksonPoly::Term> SymbolicDicksonPoly::nonzero_terms()
    const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.coeff != 0) out.push_back(t);
  return out;
}

SymbolicDicksonPoly dickson_symbolic(long long k, long long m) {
  if (k < 0 || m < 0) throw Error("dickson_symbolic requires k, m >= 0");
  auto E = kind_row(k, /*second_kind=*/true);
  auto D = kind_row(k, /*second_kind=*/false);
  std::vector<SymbolicDicksonPoly::Term> terms;
  terms.reserve(E.size());
  for (std::size_t i = 0; i < E.size(); ++i) {
    long long c =
        checked_sub(checked_mul(m, E[i]), checked_mul(m - 1, D[i]));
    terms.push_back({static_cast<int>(i), c, k - 2 * static_cast<long long>(i)});
  }
  return {k, m, /*constant_stripped=*/false, std::move(terms)};
}

SymbolicDicksonPoly frak_d(long long k, long long m) {
  if (k < 1) throw InvalidKError("the composed polynomial needs k >= 1");
  SymbolicDicksonPoly full = dickson_symbolic(k, m);
  std::vector<SymbolicDicksonPoly::Term> terms;
  for (const auto& t : full.terms())
    if (t.exponent > 0) terms.push_back(t);
  return {k, m, /*constant_stripped=*/true, std::move(terms)};
}

std::vector<std::pair<int, long long>> reduced_terms(
    const SymbolicDicksonPoly& sym, long long p) {
  if (p < 2) throw Error("characteristic must be a prime >= 2");
  std::vector<std::pair<int, long long>> out;
  for (const auto& t : sym.terms()) {
    long long c = mod_into(t.coeff, p);
    if (c != 0) out.emplace_back(t.index, c);
  }
  return out;
}

SparsePoly instantiate(const SymbolicDicksonPoly& sym, const Field& field,
                       const FieldElement& a, long long d) {
  if (d < 1) throw Error("instantiate requires d >= 1");
  SparsePoly out(field);
  for (const auto& t : sym.terms()) {
    long long c = mod_into(t.coeff, field.characteristic());
    if (c == 0) continue;
    out.add_term(t.exponent * d,
                 field.mul(field.from_integer(c),
                           field.pow(a, static_cast<unsigned long long>(
                                            t.index))));
  }
  return out;
}

std::string format_symbolic(const SymbolicDicksonPoly& sym, long long d) {
  if (d < 1) throw Error("format_symbolic requires d >= 1");
  auto terms = sym.nonzero_terms();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    long long c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long mag = c < 0 ? -c : c;
    std::vector<std::string> factors;
    if (t.index > 0)
      factors.push_back(t.index == 1 ? "a" : "a^" + std::to_string(t.index));
    if (t.exponent > 0) {
      long long e = t.exponent * d;
      factors.push_back(e == 1 ? "x" : "x^" + std::to_string(e));
    }
    if (mag != 1 || factors.empty())
      factors.insert(factors.begin(), std::to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

DicksonSpec parse_dickson_spec(const std::string& s) {
  DicksonSpec spec;
  bool saw_k = false, saw_m = false;
  std::size_t i = 0;
  while (i < s.size()) {
    auto next = s.find(',', i);
    if (next == std::string::npos) next = s.size();
    std::string piece = s.substr(i, next - i);
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("expected key=value in '" + piece + "'");
    std::string key = piece.substr(0, eq);
    std::string value = piece.substr(eq + 1);
    auto strip = [](std::string& t) {
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
        t.erase(t.begin());
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
        t.pop_back();
    };
    strip(key);
    strip(value);
    auto as_ll = [&](const char* what) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("trail");
        return v;
      } catch (const std::exception&) {
        throw SyntaxError(std::string("bad integer for ") + what + ": '" +
                          value + "'");
      }
    };
    if (key == "k") {
      spec.k = as_ll("k");
      saw_k = true;
    } else if (key == "m") {
      spec.m = as_ll("m");
      saw_m = true;
    } else if (key == "d") {
      spec.d = as_ll("d");
    } else if (key == "p") {
      spec.p = as_ll("p");
    } else if (key == "a") {
      spec.a = value;
    } else {
      throw SyntaxError("unknown key '" + key + "' in Dickson spec");
    }
    i = next + (next < s.size() ? 1 : 0);
  }
  if (!saw_k || !saw_m)
    throw SyntaxError("Dickson spec needs at least k=... and m=...");
  if (spec.k < 0 || spec.m < 0 || spec.d < 1)
    throw SyntaxError("Dickson spec out of range: k, m >= 0 and d >= 1");
  return spec;
}

}  // namespace dopoly
