// dopoly: Dickson polynomial construction, Dembowski-Ostrom classification,
// planarity testing and point-count bounds over odd-characteristic finite
// fields. Every subcommand is deterministic given its parameters; reports
// embed the field modulus so runs are reproducible even when the default
// modulus search changes.
//
// Exit codes: 0 success / claims hold, 2 claims mismatch, 1 usage or error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dopoly/dickson.hpp"
#include "dopoly/do_classify.hpp"
#include "dopoly/planarity.hpp"
#include "dopoly/reproduce.hpp"
#include "dopoly/weil.hpp"

using json = nlohmann::ordered_json;
using namespace dopoly;

namespace {

constexpr const char* kVersion = "0.1.0";

unsigned default_jobs() {
  if (const char* env = std::getenv("DOPOLY_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

json report_skeleton(const std::string& command, json parameters) {
  json r;
  r["command"] = command;
  r["version"] = kVersion;
  r["parameters"] = std::move(parameters);
  return r;
}

void emit(const json& r, const std::string& out) {
  if (out == "json") {
    std::cout << r.dump(2) << "\n";
  }
}

std::string method_name(PlanarityMethod m) {
  return m == PlanarityMethod::TwoToOne ? "two-to-one" : "delta-permutation";
}

// --------------------------------------------------------------------------

int cmd_dickson(const DicksonSpec& spec, const std::string& field_desc,
                const std::string& out) {
  Timer timer;
  auto sym = spec.k == 0 ? dickson_symbolic(0, spec.m) : frak_d(spec.k, spec.m);
  std::string symbolic = format_symbolic(sym, spec.d);

  json r = report_skeleton("dickson", {{"k", spec.k},
                                       {"m", spec.m},
                                       {"d", spec.d}});
  r["symbolic"] = symbolic;

  std::optional<Field> field;
  if (!field_desc.empty()) {
    auto fd = parse_field_description(field_desc);
    field.emplace(fd.p, fd.e, std::move(fd.modulus));
  } else if (spec.p) {
    field.emplace(*spec.p, 1, std::nullopt);
  }
  std::string instantiated;
  if (field) {
    FieldElement a =
        spec.a ? field->parse_element(*spec.a) : field->one();
    instantiated = format_poly(instantiate(sym, *field, a, spec.d));
    r["field"] = field->description();
    r["a"] = field->element_to_string(a);
    r["instantiated"] = instantiated;
  }
  r["runtime_ms"] = timer.ms();
  if (out == "json") {
    emit(r, out);
  } else {
    std::cout << (field ? instantiated : symbolic) << "\n";
    if (field && out == "text") std::cout << "symbolic: " << symbolic << "\n";
  }
  return 0;
}

int cmd_classify(long long p, long long kmax, long long dmax,
                 const std::string& m_arg, unsigned jobs,
                 const std::string& out) {
  Timer timer;
  std::vector<long long> m_values;
  if (m_arg == "all") {
    for (long long m = 0; m < p; ++m) m_values.push_back(m);
  } else {
    std::stringstream ss(m_arg);
    std::string piece;
    while (std::getline(ss, piece, ','))
      m_values.push_back(std::stoll(piece));
  }
  auto res = classify_sweep(p, kmax, m_values, dmax, jobs);

  if (out == "csv") {
    std::cout << "k,m,d,p,is_do,predicted,witnesses\n";
    auto print_row = [&](const SweepRow& row) {
      std::cout << row.k << "," << row.m << "," << row.d << "," << p << ","
                << (row.observed_do ? 1 : 0) << ","
                << (row.predicted_do ? 1 : 0) << "," << row.witnesses << "\n";
    };
    for (const auto& row : res.mismatches) print_row(row);
    for (const auto& row : res.rows)
      if (!row.mismatch()) print_row(row);
  } else if (out == "json") {
    json r = report_skeleton("classify", {{"p", p},
                                          {"kmax", kmax},
                                          {"dmax", dmax},
                                          {"m", m_values}});
    r["rows"] = res.rows.size();
    long long do_rows = 0;
    for (const auto& row : res.rows)
      if (row.observed_do) ++do_rows;
    r["do_rows"] = do_rows;
    r["mismatches"] = json::array();
    for (const auto& row : res.mismatches)
      r["mismatches"].push_back({{"k", row.k},
                                 {"m", row.m},
                                 {"d", row.d},
                                 {"is_do", row.observed_do},
                                 {"predicted", row.predicted_do},
                                 {"witnesses", row.witnesses}});
    r["runtime_ms"] = timer.ms();
    emit(r, out);
  } else {
    long long do_rows = 0;
    for (const auto& row : res.rows)
      if (row.observed_do) ++do_rows;
    std::cout << "checked " << res.rows.size() << " (k,m,d) triples over p="
              << p << ": " << do_rows << " DO, " << res.mismatches.size()
              << " mismatches\n";
    for (const auto& row : res.mismatches)
      std::cout << "  mismatch at k=" << row.k << " m=" << row.m
                << " d=" << row.d << ": observed=" << row.observed_do
                << " predicted=" << row.predicted_do << "\n";
  }
  return res.mismatches.empty() ? 0 : 2;
}

int cmd_planar_single(const Field& field, const std::string& poly_str,
                      const std::optional<std::string>& a_str,
                      const std::string& out) {
  Timer timer;
  std::optional<FieldElement> a;
  if (a_str) a = field.parse_element(*a_str);
  SparsePoly f = parse_poly(poly_str, field, a);
  PlanarityReport rep =
      is_do_shaped(f) ? is_planar_do(f) : is_planar_definition(f);

  json r = report_skeleton("planar", {{"poly", poly_str}});
  r["field"] = field.description();
  if (a) r["a"] = field.element_to_string(*a);
  r["planar"] = rep.planar;
  r["method"] = method_name(rep.method);
  if (const auto* root = std::get_if<NonzeroRoot>(&rep.witness))
    r["witness"] = {{"kind", "nonzero-root"},
                    {"z", field.element_to_string(root->z)}};
  else if (const auto* col = std::get_if<DeltaCollision>(&rep.witness))
    r["witness"] = {{"kind", "delta-collision"},
                    {"eps", field.element_to_string(col->eps)},
                    {"x1", field.element_to_string(col->x1)},
                    {"x2", field.element_to_string(col->x2)}};
  else if (const auto* ex = std::get_if<PreimageExcess>(&rep.witness))
    r["witness"] = {{"kind", "preimage-excess"},
                    {"value", field.element_to_string(ex->value)},
                    {"count", ex->count}};
  r["runtime_ms"] = timer.ms();
  if (out == "json")
    emit(r, out);
  else
    std::cout << (rep.planar ? "planar" : "not planar") << " ("
              << method_name(rep.method) << ")\n";
  return 0;
}

int cmd_planar_sweep(const Field& field, const std::string& poly_str,
                     unsigned jobs, const std::string& out) {
  Timer timer;
  auto fam = parse_parametric(poly_str, field);
  auto res = planar_set_sweep(fam, jobs);

  json r = report_skeleton("planar", {{"poly", poly_str}, {"sweep_a", true}});
  r["field"] = field.description();
  r["poly"] = poly_str;
  r["planar_set"] = json::array();
  for (const auto& a : res.planar_values)
    r["planar_set"].push_back(field.element_to_string(a));
  r["planar_count"] = res.planar_values.size();
  if (res.residue_pattern)
    r["residue_pattern"] = {{"modulus", res.residue_pattern->modulus},
                            {"residue", res.residue_pattern->residue},
                            {"base", "dlog"}};
  else
    r["residue_pattern"] = nullptr;
  r["method"] = method_name(res.method);
  r["runtime_ms"] = timer.ms();
  if (out == "json") {
    emit(r, out);
  } else {
    std::cout << res.planar_values.size() << " planar values over "
              << field.description() << "\n";
    if (res.residue_pattern)
      std::cout << "pattern: dlog = " << res.residue_pattern->residue
                << " (mod " << res.residue_pattern->modulus << ")\n";
    for (const auto& a : res.planar_values)
      std::cout << "  " << field.element_to_string(a) << " = g^"
                << dlog(field, a) << "\n";
  }
  return 0;
}

int cmd_planar_reproduce(int max_e, unsigned jobs, std::uint64_t seed,
                         const std::string& out) {
  Timer timer;
  auto claims = run_planar_catalog(max_e, jobs, seed);
  bool all_pass = true;
  json items = json::array();
  for (const auto& c : claims) {
    all_pass = all_pass && c.pass;
    items.push_back({{"name", c.name},
                     {"pass", c.pass},
                     {"partial", c.partial},
                     {"details", c.details}});
    if (out != "json")
      std::cout << (c.pass ? "[PASS]" : "[FAIL]") << (c.partial ? "*" : " ")
                << " " << c.name << " -- " << c.details << "\n";
  }
  if (out != "json")
    std::cout << (all_pass ? "all claims hold" : "CLAIMS MISMATCH")
              << " (* = sampled/partial)\n";
  if (out == "json") {
    json r = report_skeleton("planar --reproduce",
                             {{"max_e", max_e}, {"seed", seed}});
    r["claims"] = items;
    r["all_pass"] = all_pass;
    r["runtime_ms"] = timer.ms();
    emit(r, out);
  }
  return all_pass ? 0 : 2;
}

int cmd_weil_min_e(long long p, int deg, long long boundary,
                   const std::string& out) {
  int e = min_e_exceeding(p, deg, boundary);
  if (out == "json") {
    long long rad = static_cast<long long>(deg - 1) * (deg - 2);
    __int128 q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    __int128 a = q + 1 - deg - boundary;
    json r = report_skeleton(
        "weil min-e", {{"p", p}, {"deg", deg}, {"boundary", boundary}});
    r["min_e"] = e;
    r["check"] = {{"e", e},
                  {"lhs_sq", static_cast<double>(a * a)},
                  {"rhs_sq", static_cast<double>(rad * rad * q)}};
    emit(r, out);
  } else {
    std::cout << e << "\n";
  }
  return 0;
}

int cmd_weil_interval(std::uint64_t q, int deg, const std::string& out) {
  auto b = weil_interval(q, deg);
  if (out == "json") {
    json r = report_skeleton("weil interval", {{"q", q}, {"deg", deg}});
    r["lower"] = {{"int_part", b.lower_int},
                  {"sqrt_coeff", -b.rad},
                  {"value", b.lower_value()}};
    r["upper"] = {{"int_part", b.upper_int},
                  {"sqrt_coeff", b.rad},
                  {"value", b.upper_value()}};
    emit(r, out);
  } else {
    std::cout << "[" << b.lower_value() << ", " << b.upper_value() << "]\n";
  }
  return 0;
}

int cmd_weil_count(const std::string& field_desc, const std::string& h_str,
                   const std::optional<std::string>& a_str,
                   const std::string& out) {
  Timer timer;
  Field F = make_field(field_desc);
  std::optional<FieldElement> a;
  if (a_str) a = F.parse_element(*a_str);
  BivariatePoly h = parse_bivariate(h_str, F, a);
  long long n = count_bivariate_zeros(h);
  long long axes = xy_zero_solutions(h);
  auto b = weil_interval(F.size(), static_cast<int>(h.total_degree()));
  if (out == "json") {
    json r = report_skeleton("weil count", {{"h", h_str}});
    r["field"] = F.description();
    r["zeros"] = n;
    r["axis_zeros"] = axes;
    r["degree"] = h.total_degree();
    r["weil_interval"] = {{"lower", b.lower_value()},
                          {"upper", b.upper_value()},
                          {"contains", b.contains(n)}};
    r["runtime_ms"] = timer.ms();
    emit(r, out);
  } else {
    std::cout << n << " zeros (" << axes << " on the axes); interval ["
              << b.lower_value() << ", " << b.upper_value() << "] "
              << (b.contains(n) ? "contains" : "DOES NOT contain")
              << " the count\n";
  }
  return 0;
}

int cmd_appendix(long long p, bool verify, int nmax, const std::string& out) {
  Timer timer;
  auto fams = appendix_table(p);
  bool all_ok = true;
  json items = json::array();
  for (const auto& fam : fams) {
    json jf;
    jf["label"] = fam.label;
    jf["k_pattern"] = fam.k_scales_by_p
                          ? std::to_string(fam.k0) + "*p^l"
                          : std::to_string(fam.k0);
    jf["m_residue"] = fam.m_residue;
    jf["d"] = fam.alpha_free
                  ? "p^n(p^alpha+1)/" + std::to_string(fam.d_divisor)
                  : std::to_string(fam.d_base) + "*p^n";
    jf["parameters"] = fam.alpha_free
                           ? (fam.k_scales_by_p ? "n,l,alpha" : "n,alpha")
                           : (fam.k_scales_by_p ? "n,l" : "n");
    json terms = json::array();
    for (const auto& t : fam.terms) {
      json jt;
      jt["coeff"] = t.coeff;
      jt["a_power"] = t.a_power;
      jt["exponent"] = {{"base", t.exponent.base},
                        {"p_shift", t.exponent.shift},
                        {"times_palpha_plus_1", t.exponent.times_palpha1}};
      terms.push_back(jt);
    }
    jf["exponents_and_coefficients"] = terms;
    if (verify) {
      bool fam_ok = true;
      for (int n = 0; n <= nmax; ++n)
        for (int l = 0; l <= (fam.k_scales_by_p ? nmax : 0); ++l)
          for (int alpha = 0; alpha <= (fam.alpha_free ? nmax : 0); ++alpha) {
            auto d = family_d(fam, n, alpha);
            if (!d) continue;
            if (!family_matches_dickson(fam, n, l, alpha) ||
                !is_do(family_k(fam, l), std::max(fam.m_residue, 0LL), *d, p))
              fam_ok = false;
          }
      jf["verified"] = fam_ok;
      all_ok = all_ok && fam_ok;
      if (out != "json")
        std::cout << (fam_ok ? "[PASS] " : "[FAIL] ") << fam.label << "\n";
    }
    items.push_back(jf);
  }
  if (out == "json") {
    json r = report_skeleton("appendix", {{"p", p},
                                          {"verify", verify},
                                          {"nmax", nmax}});
    r["families"] = items;
    if (verify) r["all_verified"] = all_ok;
    r["runtime_ms"] = timer.ms();
    emit(r, out);
  } else if (!verify) {
    for (const auto& fam : fams) std::cout << fam.label << "\n";
  }
  return (verify && !all_ok) ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dopoly: Dickson polynomials, Dembowski-Ostrom classification, and "
      "planar function testing over odd-characteristic finite fields"};
  app.require_subcommand(1);
  app.fallthrough();  // --out/--jobs may follow the subcommand

  std::string out = "text";
  unsigned jobs = default_jobs();
  app.add_option("--out", out, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", jobs, "worker count (env DOPOLY_JOBS)");

  // dickson
  auto* dk = app.add_subcommand("dickson", "construct a Dickson polynomial");
  DicksonSpec spec;
  std::string spec_str, dk_field, dk_a;
  dk->add_option("--k", spec.k, "degree index");
  dk->add_option("--m", spec.m, "kind index");
  dk->add_option("--d", spec.d, "composition exponent")->default_val(1);
  long long dk_p = 0;
  dk->add_option("--p", dk_p, "characteristic (prime field instantiation)");
  dk->add_option("--a", dk_a, "parameter value: integer, tuple, or g^k");
  dk->add_option("--field", dk_field, "field description, e.g. 3^4/x^4+2x^3+2");
  dk->add_option("--spec", spec_str, "compact spec: k=5,m=2,d=2,p=3,a=g^7");

  // classify
  auto* cl = app.add_subcommand("classify",
                                "sweep the DO classification against the "
                                "known parameter families");
  long long cl_p = 0, cl_kmax = 40, cl_dmax = 200;
  std::string cl_m = "all";
  cl->add_option("--p", cl_p, "odd prime characteristic")->required();
  cl->add_option("--kmax", cl_kmax, "max degree index")->default_val(40);
  cl->add_option("--dmax", cl_dmax, "max composition exponent")
      ->default_val(200);
  cl->add_option("--m", cl_m, "kind list, e.g. 2 or 3,4 or all");

  // planar
  auto* pl = app.add_subcommand("planar", "planarity tests and sweeps");
  std::string pl_field, pl_poly, pl_a, pl_reproduce;
  bool pl_sweep = false;
  int pl_max_e = 5;
  std::uint64_t pl_seed = 20260810;
  pl->add_option("--field", pl_field, "field description");
  pl->add_option("--poly", pl_poly, "polynomial, may mention a");
  pl->add_option("--a", pl_a, "bind the parameter a");
  pl->add_flag("--sweep-a", pl_sweep, "sweep a over the nonzero elements");
  pl->add_option("--reproduce", pl_reproduce,
                 "run the built-in claim catalog (thm63)");
  pl->add_option("--max-e", pl_max_e, "extension-degree cap for --reproduce")
      ->default_val(5);
  pl->add_option("--seed", pl_seed, "seed for sampled checks");

  // weil
  auto* we = app.add_subcommand("weil", "point-count bounds");
  we->require_subcommand(1);
  auto* we_min = we->add_subcommand("min-e", "smallest e beating a boundary");
  long long wm_p = 0, wm_boundary = 0;
  int wm_deg = 0;
  we_min->add_option("--p", wm_p)->required();
  we_min->add_option("--deg", wm_deg)->required();
  we_min->add_option("--boundary", wm_boundary)->required();
  auto* we_int = we->add_subcommand("interval", "exact count interval");
  std::uint64_t wi_q = 0;
  int wi_deg = 0;
  we_int->add_option("--q", wi_q)->required();
  we_int->add_option("--deg", wi_deg)->required();
  auto* we_cnt = we->add_subcommand("count", "brute-force zero count");
  std::string wc_field, wc_h, wc_a;
  we_cnt->set_help_flag("--help", "print help");  // frees -h for the curve
  we_cnt->add_option("--field", wc_field)->required();
  we_cnt->add_option("--h", wc_h, "bivariate polynomial in x, y")->required();
  we_cnt->add_option("--a", wc_a, "bind the parameter a");

  // appendix
  auto* ap = app.add_subcommand("appendix", "the machine-encoded DO family "
                                            "table");
  long long ap_p = 0;
  bool ap_verify = false;
  int ap_nmax = 2;
  ap->add_option("--p", ap_p)->required();
  ap->add_flag("--verify", ap_verify, "instantiate and re-check families");
  ap->add_option("--nmax", ap_nmax, "parameter bound for --verify")
      ->default_val(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dk) {
      if (!spec_str.empty()) {
        spec = parse_dickson_spec(spec_str);
        if (spec.a) dk_a = *spec.a;
      }
      if (dk_p != 0) spec.p = dk_p;
      if (!dk_a.empty()) spec.a = dk_a;
      return cmd_dickson(spec, dk_field, out);
    }
    if (*cl) return cmd_classify(cl_p, cl_kmax, cl_dmax, cl_m, jobs, out);
    if (*pl) {
      if (!pl_reproduce.empty()) {
        if (pl_reproduce != "thm63")
          throw Error("unknown reproduce catalog '" + pl_reproduce + "'");
        return cmd_planar_reproduce(pl_max_e, jobs, pl_seed, out);
      }
      if (pl_field.empty() || pl_poly.empty())
        throw Error("planar needs --field and --poly (or --reproduce)");
      Field F = make_field(pl_field);
      if (pl_sweep) return cmd_planar_sweep(F, pl_poly, jobs, out);
      return cmd_planar_single(
          F, pl_poly,
          pl_a.empty() ? std::nullopt : std::make_optional(pl_a), out);
    }
    if (*we_min) return cmd_weil_min_e(wm_p, wm_deg, wm_boundary, out);
    if (*we_int) return cmd_weil_interval(wi_q, wi_deg, out);
    if (*we_cnt)
      return cmd_weil_count(
          wc_field, wc_h,
          wc_a.empty() ? std::nullopt : std::make_optional(wc_a), out);
    if (*ap) return cmd_appendix(ap_p, ap_verify, ap_nmax, out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}
