// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code 0 iff every criterion passes. Sweep work is parallelized but
// every expected value below is pinned in code; nothing is calibrated at
// runtime.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "dopoly/do_classify.hpp"
#include "dopoly/planarity.hpp"
#include "dopoly/reproduce.hpp"
#include "dopoly/weil.hpp"

using namespace dopoly;

namespace {

unsigned jobs() {
  if (const char* env = std::getenv("DOPOLY_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Outcome {
  bool pass = true;
  bool partial = false;
  std::string detail;
};

struct Check {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

// Planar set of family(a) equals {a : want(a)} exactly.
void expect_planar_set(Outcome& o, const Field& F, const std::string& family,
                       const std::function<bool(const FieldElement&)>& want,
                       const std::string& what) {
  auto sweep = planar_set_sweep(parse_parametric(family, F), jobs());
  std::vector<FieldElement> expected;
  for (const auto& a : F.nonzero_elements())
    if (want(a)) expected.push_back(a);
  bool same = sweep.planar_values.size() == expected.size();
  if (same)
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!(sweep.planar_values[i] == expected[i])) same = false;
  expect(o, same,
         what + " (got " + std::to_string(sweep.planar_values.size()) +
             ", want " + std::to_string(expected.size()) + ")");
}

// Exact binomial, oracle-side.
long long binom(long long n, long long r) {
  if (r < 0 || r > n) return 0;
  __int128 acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc = acc * (n - r + i);
    acc /= i;
  }
  return static_cast<long long>(acc);
}

SparsePoly random_do_poly(const Field& F, std::mt19937_64& rng) {
  std::vector<long long> exps;
  long long pi = 1;
  for (int i = 0; i < F.extension_degree(); ++i) {
    long long pj = pi;
    for (int j = i; j < F.extension_degree(); ++j) {
      exps.push_back(pi + pj);
      pj *= F.characteristic();
    }
    pi *= F.characteristic();
  }
  std::shuffle(exps.begin(), exps.end(), rng);
  std::uniform_int_distribution<std::uint64_t> coeff(1, F.size() - 1);
  std::uniform_int_distribution<std::size_t> nterms(
      1, std::min<std::size_t>(4, exps.size()));
  SparsePoly f(F);
  std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t)
    f.add_term(exps[t], F.element_at(coeff(rng)));
  return f;
}

SparsePoly random_poly(const Field& F, std::mt19937_64& rng, long long max_exp,
                       int max_terms) {
  std::uniform_int_distribution<long long> exp_pick(0, max_exp);
  std::uniform_int_distribution<std::uint64_t> coeff_pick(0, F.size() - 1);
  std::uniform_int_distribution<int> n_pick(1, max_terms);
  SparsePoly f(F);
  for (int t = n_pick(rng); t > 0; --t)
    f.add_term(exp_pick(rng), F.element_at(coeff_pick(rng)));
  return f;
}

// --------------------------------------------------------------------------

Outcome criterion_1() {
  Outcome o;
  auto res = classify_sweep(3, 40, {2}, 200, jobs());
  expect(o, res.mismatches.empty(),
         std::to_string(res.mismatches.size()) + " mismatches");
  o.detail = std::to_string(res.rows.size()) + " triples, " +
             std::to_string(res.mismatches.size()) + " mismatches";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  long long total = 0;
  for (long long p : {5, 7, 11}) {
    auto res = classify_sweep(p, 40, {3, 4}, 200, jobs());
    total += static_cast<long long>(res.rows.size());
    expect(o, res.mismatches.empty(),
           "p=" + std::to_string(p) + ": " +
               std::to_string(res.mismatches.size()) + " mismatches");
  }
  if (o.pass) o.detail = std::to_string(total) + " triples, 0 mismatches";
  return o;
}

Outcome criterion_3() {
  Outcome o;
  long long total = 0, do_rows = 0;
  for (long long p : {7, 11, 13}) {
    std::vector<long long> ms;
    for (long long m = 5; m < p; ++m) ms.push_back(m);
    auto res = classify_sweep(p, 40, ms, 200, jobs());
    total += static_cast<long long>(res.rows.size());
    expect(o, res.mismatches.empty(),
           "p=" + std::to_string(p) + ": " +
               std::to_string(res.mismatches.size()) + " mismatches");
    for (const auto& row : res.rows)
      if (row.observed_do) {
        ++do_rows;
        bool stated_form =
            (row.k == 1 && form_witness(row.d, p, 1).has_value()) ||
            (row.k == 2 && form_witness(row.d, p, 2).has_value());
        expect(o, stated_form,
               "DO outside k in {1,2} at p=" + std::to_string(p) + " k=" +
                   std::to_string(row.k) + " d=" + std::to_string(row.d));
        if (!o.pass) break;
      }
  }
  if (o.pass)
    o.detail = std::to_string(total) + " triples, DO rows (" +
               std::to_string(do_rows) + ") all k in {1,2} with stated d";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  int families = 0, instances = 0, vacuous = 0;
  for (long long p : {3LL, 5LL}) {
    for (const auto& fam : appendix_table(p)) {
      ++families;
      int valid = 0;
      for (int n = 0; n <= 2; ++n)
        for (int l = 0; l <= (fam.k_scales_by_p ? 2 : 0); ++l)
          for (int alpha = 0; alpha <= (fam.alpha_free ? 2 : 0); ++alpha) {
            auto d = family_d(fam, n, alpha);
            if (!d) continue;  // divisor must divide p^alpha + 1
            ++valid;
            ++instances;
            expect(o, family_matches_dickson(fam, n, l, alpha),
                   fam.label + ": printed terms differ at n=" +
                       std::to_string(n) + ",l=" + std::to_string(l) +
                       ",alpha=" + std::to_string(alpha));
            expect(o,
                   is_do(family_k(fam, l), std::max(fam.m_residue, 0LL), *d,
                         fam.p),
                   fam.label + ": instance not DO");
          }
      if (valid == 0) {
        // Some listed d-forms are arithmetically empty, e.g. p=5 with
        // divisor 4: 5^alpha + 1 = 2 (mod 4) for every alpha. Such a family
        // has nothing to instantiate at any parameter, not just within the
        // tested bound.
        bool empty_form = fam.alpha_free;
        for (int alpha = 0; alpha <= 20 && empty_form; ++alpha)
          if (family_d(fam, 0, alpha)) empty_form = false;
        expect(o, empty_form, fam.label + ": no valid parameters at all");
        if (empty_form) ++vacuous;
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(families) + " families, " +
               std::to_string(instances) + " instantiations, " +
               std::to_string(vacuous) + " vacuous d-form(s)";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  Field F81 = make_field(3, 4, {{2, 0, 0, 2, 1}});
  // The computed claim is about the squared-parameter family; the theorem's
  // restatement drops the square (see the x^10+c x^2 regression test in
  // test_planarity for the literal family's 30-element set).
  expect_planar_set(o, F81, "x^10 + a^2*x^2",
                    [&](const FieldElement& a) { return dlog(F81, a) % 4 == 2; },
                    "planar set != {g^(4n+2)}");
  if (o.pass) o.detail = "20 elements, dlog = 2 (mod 4)";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  Field F9 = make_field(3, 2);
  expect_planar_set(o, F9, "x^12+2*a*x^10+a^3*x^6+2*a^4*x^4",
                    [](const FieldElement& a) { return !is_kth_power(a, 2); },
                    "planar set != non-squares");
  if (o.pass) o.detail = "4 elements, the non-squares of F_9^*";
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const std::string fam = "x^36+2*a*x^28+2*a^3*x^12+a^4*x^4";
  for (int e : {1, 3, 5, 7}) {
    Field F = make_field(3, e);
    expect_planar_set(o, F, fam,
                      [](const FieldElement& a) { return !is_kth_power(a, 2); },
                      "e=" + std::to_string(e) + ": planar set != non-squares");
  }
  {
    Field F = make_field(3, 9);
    auto sample = sample_square_dichotomy(F, fam, 100, 20260810);
    expect(o, sample.pass, "e=9 sample found a violation");
    o.partial = true;
    if (o.pass)
      o.detail = "full sweeps e in {1,3,5,7}; e=9 sampled " +
                 std::to_string(sample.squares_tested) + "+" +
                 std::to_string(sample.nonsquares_tested) + " (partial)";
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  Field F25 = make_field(5, 2, {{2, 4, 1}});
  expect_planar_set(o, F25, "x^6+4*a*x^2",
                    [&](const FieldElement& a) { return dlog(F25, a) % 4 == 3; },
                    "x^6+4ax^2: planar set != {g^(4n+3)}");
  expect_planar_set(o, F25, "x^10+2*a*x^6+a^2*x^2",
                    [](const FieldElement& a) { return !is_kth_power(-a, 4); },
                    "x^10+2ax^6+a^2x^2 over 5^2: != {-a not 4th power}");
  Field F5 = make_field(5, 1);
  expect_planar_set(o, F5, "x^10+2*a*x^6+a^2*x^2",
                    [&](const FieldElement& a) {
                      return a != F5.from_integer(4);
                    },
                    "x^10+2ax^6+a^2x^2 over 5^1: != {a != 4}");
  if (o.pass) o.detail = "{g^(4n+3)} (6), {-a not 4th power} (18), {a != 4} (3)";
  return o;
}

Outcome criterion_9() {
  Outcome o;
  auto expect_empty = [&](int e, const std::string& fam) {
    Field F = make_field(3, e);
    expect_planar_set(o, F, fam,
                      [](const FieldElement&) { return false; },
                      fam + " not empty at e=" + std::to_string(e));
  };
  for (int e : {3, 5, 6}) expect_empty(e, "x^10+a^2*x^2");
  for (int e : {2, 3}) expect_empty(e, "x^6+2*a*x^4");
  for (int e = 3; e <= 7; ++e)
    expect_empty(e, "x^12+2*a*x^10+a^3*x^6+2*a^4*x^4");
  if (o.pass) o.detail = "10 sweeps, all planar sets empty";
  return o;
}

Outcome criterion_10() {
  Outcome o;
  struct Row {
    long long p;
    int deg;
    long long boundary;
    int expected;
  };
  for (auto [p, deg, boundary, expected] :
       {Row{3, 8, 16, 7}, Row{3, 2, 4, 2}, Row{3, 4, 1, 4}, Row{3, 10, 16, 8},
        Row{5, 4, 8, 3}}) {
    int got = min_e_exceeding(p, deg, boundary);
    expect(o, got == expected,
           "(" + std::to_string(p) + "," + std::to_string(deg) + "," +
               std::to_string(boundary) + ") -> " + std::to_string(got) +
               " != " + std::to_string(expected));
  }
  if (o.pass) o.detail = "5 thresholds exact";
  return o;
}

Outcome criterion_11() {
  Outcome o;
  std::mt19937_64 rng(20260811);
  int checked = 0;
  for (auto [p, e] : std::vector<std::pair<long long, int>>{
           {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    Field F = make_field(p, e);
    for (int trial = 0; trial < 40; ++trial) {
      SparsePoly f = random_do_poly(F, rng);
      ++checked;
      bool def = is_planar_definition(f).planar;
      bool tto = is_two_to_one(f).two_to_one;
      expect(o, def == tto,
             "disagreement over " + F.description() + " on " + format_poly(f));
      if (!o.pass) return o;
    }
  }
  o.detail = std::to_string(checked) + " DO polynomials, both routes agree";
  return o;
}

Outcome criterion_12() {
  Outcome o;
  struct Curve {
    const char* expr;
    int deg;
  };
  const std::vector<Curve> curves = {{"x^2+y^2-a", 2},
                                     {"a*x^2+a*y^2+x^2*y^2", 4},
                                     {"x^8+y^8-a^2", 8}};
  int counted = 0;
  for (int e : {2, 3, 4, 5}) {
    Field F = make_field(3, e);
    auto q = F.size();
    std::mt19937_64 rng(20260812 + q);
    std::uniform_int_distribution<std::uint64_t> pick(1, q - 1);
    for (const auto& curve : curves) {
      auto bound = weil_interval(q, curve.deg);
      for (int trial = 0; trial < 5; ++trial) {
        FieldElement a = F.element_at(pick(rng));
        auto h = parse_bivariate(curve.expr, F, a);
        long long n = count_bivariate_zeros(h);
        ++counted;
        expect(o, bound.contains(n),
               std::string(curve.expr) + " over q=" + std::to_string(q) +
                   ": count " + std::to_string(n) + " outside interval");
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(counted) + " counts inside their intervals";
  return o;
}

Outcome criterion_13() {
  Outcome o;
  {  // recurrence vs closed form, exact integers
    for (long long k = 0; k <= 40 && o.pass; ++k)
      for (long long m = 0; m <= 12 && o.pass; ++m) {
        auto sym = dickson_symbolic(k, m);
        for (const auto& t : sym.terms()) {
          long long expected;
          if (k == 0) {
            expected = 2 - m;
          } else {
            __int128 num =
                static_cast<__int128>(k - m * t.index) * binom(k - t.index,
                                                               t.index);
            expected = static_cast<long long>(num / (k - t.index));
            if (t.index % 2 != 0) expected = -expected;
          }
          expect(o, t.coeff == expected,
                 "closed form mismatch at k=" + std::to_string(k) +
                     " m=" + std::to_string(m));
        }
      }
  }
  {  // kind periodicity
    for (long long p : {3, 5, 7}) {
      Field F = make_field(p, 1);
      for (long long k = 0; k <= 30 && o.pass; ++k)
        for (long long m = 0; m < p; ++m) {
          auto low = dickson_symbolic(k, m);
          auto high = dickson_symbolic(k, m + p);
          for (const auto& a : F.elements())
            expect(o, instantiate(low, F, a, 1) == instantiate(high, F, a, 1),
                   "periodicity fails at p=" + std::to_string(p) +
                       " k=" + std::to_string(k) + " m=" + std::to_string(m));
        }
    }
  }
  {  // difference-function additivity for DO inputs, exhaustive
    std::mt19937_64 rng(20260813);
    for (auto [p, e] : std::vector<std::pair<long long, int>>{
             {3, 2}, {5, 2}, {3, 3}}) {
      Field F = make_field(p, e);
      for (int trial = 0; trial < 10 && o.pass; ++trial) {
        SparsePoly f = random_do_poly(F, rng);
        for (const auto& eps : F.nonzero_elements()) {
          auto delta = [&](const FieldElement& x) {
            return eval(f, x + eps) - eval(f, x) - eval(f, eps);
          };
          for (const auto& x1 : F.elements())
            for (const auto& x2 : F.elements())
              if (!(delta(x1 + x2) == delta(x1) + delta(x2))) {
                expect(o, false, "additivity fails over " + F.description());
                break;
              }
          if (!o.pass) break;
        }
      }
    }
  }
  {  // reduce_mod_field preserves the induced function
    std::mt19937_64 rng(20260814);
    for (auto [p, e] : std::vector<std::pair<long long, int>>{
             {3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}}) {
      Field F = make_field(p, e);
      for (int trial = 0; trial < 25 && o.pass; ++trial) {
        SparsePoly f =
            random_poly(F, rng, 3 * static_cast<long long>(F.size()), 5);
        SparsePoly r = reduce_mod_field(f);
        auto deg = r.degree();
        expect(o, !deg || *deg < static_cast<long long>(F.size()),
               "reduction degree bound fails");
        for (const auto& x : F.elements())
          if (!(eval(f, x) == eval(r, x))) {
            expect(o, false,
                   "function changed by reduction over " + F.description());
            break;
          }
      }
    }
  }
  if (o.pass)
    o.detail =
        "closed form, periodicity, additivity, reduction: all bounds clean";
  return o;
}

}  // namespace

int main() {
  const std::vector<Check> checks = {
      {1, "DO classification sweep, p=3 m=2, k<=40 d<=200", criterion_1},
      {2, "DO classification sweep, p in {5,7,11} m in {3,4}", criterion_2},
      {3, "DO classification sweep, p in {7,11,13} m>=5: only k in {1,2}",
       criterion_3},
      {4, "family table instantiation matches printed terms and is DO",
       criterion_4},
      {5, "planar set over 3^4/x^4+2x^3+2 is {g^(4n+2)}, 20 elements",
       criterion_5},
      {6, "planar set over 3^2 is the 4 non-squares", criterion_6},
      {7, "odd-e family planar exactly on non-squares (e<=7 full, e=9 "
          "sampled)",
       criterion_7},
      {8, "5^2 and 5^1 planar sets match their residue descriptions",
       criterion_8},
      {9, "non-planarity sweeps are empty", criterion_9},
      {10, "exact threshold degrees", criterion_10},
      {11, "definition route agrees with 2-to-1 on 200 random DO inputs",
       criterion_11},
      {12, "zero counts sit inside the exact intervals", criterion_12},
      {13, "property suites: closed form, periodicity, additivity, reduction",
       criterion_13},
  };

  int failures = 0;
  for (const auto& c : checks) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    auto secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::ostringstream line;
    line << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
         << c.name;
    if (o.partial) line << " [partial]";
    if (!o.detail.empty()) line << " -- " << o.detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!o.pass) ++failures;
  }
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 13 criteria hold" << std::endl;
  return 0;
}
