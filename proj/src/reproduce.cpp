#include "dopoly/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace dopoly {

namespace {

std::string join_dlogs(const Field& F, const std::vector<FieldElement>& set) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& a : set) {
    if (!first) os << ",";
    first = false;
    os << "g^" << dlog(F, a);
  }
  os << "}";
  return os.str();
}

// Sweep family(a) over F_q^* and diff against an expected-membership rule.
ClaimResult sweep_against(const Field& F, const std::string& family,
                          const std::string& name, unsigned jobs,
                          const std::function<bool(const FieldElement&)>& want) {
  ClaimResult res;
  res.name = name;
  auto sweep = planar_set_sweep(parse_parametric(family, F), jobs);
  std::vector<FieldElement> expected;
  for (const auto& a : F.nonzero_elements())
    if (want(a)) expected.push_back(a);
  res.pass = sweep.planar_values.size() == expected.size() &&
             std::equal(sweep.planar_values.begin(), sweep.planar_values.end(),
                        expected.begin());
  std::ostringstream os;
  os << F.description() << ": " << sweep.planar_values.size() << " of "
     << F.size() - 1 << " planar";
  if (!res.pass)
    os << "; got " << join_dlogs(F, sweep.planar_values) << " want "
       << join_dlogs(F, expected);
  res.details = os.str();
  return res;
}

void merge(ClaimResult& into, const ClaimResult& part) {
  into.pass = into.pass && part.pass;
  into.partial = into.partial || part.partial;
  if (!into.details.empty()) into.details += "; ";
  into.details += part.details;
}

}  // namespace

SampleCheck sample_square_dichotomy(const Field& field,
                                    const std::string& family, int n_each,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, field.size() - 2);
  const FieldElement g = field.generator();
  SampleCheck out;
  out.pass = true;
  auto fam = parse_parametric(family, field);
  auto test_one = [&](const FieldElement& a, bool square) {
    bool planar = is_planar_do(fam.bind(a)).planar;
    if (planar != !square) out.pass = false;
  };
  while (out.squares_tested < n_each || out.nonsquares_tested < n_each) {
    std::uint64_t t = pick(rng);
    FieldElement a = field.pow(g, t);
    bool square = t % 2 == 0;
    if (square && out.squares_tested < n_each) {
      test_one(a, true);
      ++out.squares_tested;
    } else if (!square && out.nonsquares_tested < n_each) {
      test_one(a, false);
      ++out.nonsquares_tested;
    }
  }
  return out;
}

std::vector<ClaimResult> run_planar_catalog(int max_e, unsigned jobs,
                                            std::uint64_t seed) {
  std::vector<ClaimResult> out;

  {  // x^2 is planar over every odd-characteristic field
    ClaimResult res{"x^2 planar everywhere", true, false, ""};
    for (long long p : {3, 5}) {
      for (int e = 1; e <= std::min(max_e, 4); ++e) {
        Field F = make_field(p, e);
        if (!is_planar_do(parse_poly("x^2", F)).planar) res.pass = false;
      }
    }
    res.details = "p in {3,5}, e <= " + std::to_string(std::min(max_e, 4));
    out.push_back(std::move(res));
  }

  {  // x^{p^alpha+1} planar iff e/gcd(alpha,e) odd
    ClaimResult res{"monomial law e/gcd(alpha,e) odd", true, false, ""};
    int emax = std::min(max_e, 5);
    for (long long p : {3, 5, 7})
      for (int e = 1; e <= emax; ++e) {
        Field F = make_field(p, e);
        long long pa = 1;
        for (int alpha = 0; alpha <= 4; ++alpha) {
          SparsePoly f(F);
          f.add_term(pa + 1, F.one());
          bool expect = (e / std::gcd(alpha, e)) % 2 == 1;
          if (is_planar_do(f).planar != expect) res.pass = false;
          pa *= p;
        }
      }
    res.details = "p in {3,5,7}, alpha <= 4, e <= " + std::to_string(emax);
    out.push_back(std::move(res));
  }

  if (max_e >= 4) {  // the 3^4 family with the squared coefficient
    Field F81 = make_field(3, 4, {{2, 0, 0, 2, 1}});
    out.push_back(sweep_against(
        F81, "x^10 + a^2*x^2", "x^10+a^2*x^2 over 3^4: a = g^(4n+2)", jobs,
        [&](const FieldElement& a) { return dlog(F81, a) % 4 == 2; }));
  }

  if (max_e >= 2) {  // the 3^2 four-term family: non-squares
    Field F9 = make_field(3, 2);
    out.push_back(sweep_against(
        F9, "x^12+2*a*x^10+a^3*x^6+2*a^4*x^4",
        "x^12+2ax^10+a^3x^6+2a^4x^4 over 3^2: non-squares", jobs,
        [](const FieldElement& a) { return !is_kth_power(a, 2); }));
  }

  {  // the odd-degree tower family: non-squares for odd e
    ClaimResult res{"x^36+2ax^28+2a^3x^12+a^4x^4 over 3^e (e odd): non-squares",
                    true, false, ""};
    for (int e = 1; e <= std::min(max_e, 7); e += 2) {
      Field F = make_field(3, e);
      merge(res, sweep_against(
                     F, "x^36+2*a*x^28+2*a^3*x^12+a^4*x^4", "",
                     jobs, [](const FieldElement& a) {
                       return !is_kth_power(a, 2);
                     }));
    }
    if (max_e >= 9) {
      Field F = make_field(3, 9);
      auto sample =
          sample_square_dichotomy(F, "x^36+2*a*x^28+2*a^3*x^12+a^4*x^4", 100,
                                  seed);
      res.pass = res.pass && sample.pass;
      res.partial = true;
      res.details += "; e=9 sampled " + std::to_string(sample.squares_tested) +
                     "+" + std::to_string(sample.nonsquares_tested) +
                     " (partial)";
    }
    out.push_back(std::move(res));
  }

  if (max_e >= 2) {  // the 5^2 family: a = g^(4n+3)
    Field F25 = make_field(5, 2, {{2, 4, 1}});
    out.push_back(sweep_against(
        F25, "x^6+4*a*x^2", "x^6+4ax^2 over 5^2: a = g^(4n+3)", jobs,
        [&](const FieldElement& a) { return dlog(F25, a) % 4 == 3; }));
  }

  {  // x^10+2ax^6+a^2x^2: a != 4 over F_5; -a not a fourth power beyond
    ClaimResult res{"x^10+2ax^6+a^2x^2: -a not a fourth power", true, false,
                    ""};
    Field F5 = make_field(5, 1);
    merge(res, sweep_against(F5, "x^10+2*a*x^6+a^2*x^2", "", jobs,
                             [&](const FieldElement& a) {
                               return a != F5.from_integer(4);
                             }));
    for (int e = 2; e <= std::min(max_e, 3); ++e) {
      Field F = e == 2 ? make_field(5, 2, {{2, 4, 1}}) : make_field(5, e);
      merge(res, sweep_against(F, "x^10+2*a*x^6+a^2*x^2", "", jobs,
                               [&](const FieldElement& a) {
                                 return !is_kth_power(-a, 4);
                               }));
    }
    out.push_back(std::move(res));
  }

  {  // non-planarity sweeps
    ClaimResult res{"non-planar ranges are empty", true, false, ""};
    auto expect_empty = [&](const Field& F, const std::string& fam) {
      merge(res, sweep_against(F, fam, "", jobs,
                               [](const FieldElement&) { return false; }));
    };
    for (int e : {3, 5, 6})
      if (e <= max_e) {
        Field F = make_field(3, e);
        expect_empty(F, "x^10+a^2*x^2");
      }
    for (int e : {2, 3})
      if (e <= max_e) {
        Field F = make_field(3, e);
        expect_empty(F, "x^6+2*a*x^4");
      }
    for (int e = 3; e <= std::min(max_e, 7); ++e) {
      Field F = make_field(3, e);
      expect_empty(F, "x^12+2*a*x^10+a^3*x^6+2*a^4*x^4");
    }
    out.push_back(std::move(res));
  }

  return out;
}

}  // namespace dopoly
