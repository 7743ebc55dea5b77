#include "dopoly/planarity.hpp"

#include <algorithm>

#include "dopoly/do_classify.hpp"
#include "parallel_util.hpp"

namespace dopoly {

namespace {

// Per-field evaluation scratch. Values are computed through the generator's
// power table: x = g^t gives x^e = g^{t e mod (q-1)}, and a coefficient c
// contributes g^{dlog c + t e}. That turns a sparse evaluation into index
// arithmetic plus one coordinate addition per term.
class Engine {
 public:
  explicit Engine(const Field& f)
      : F(&f),
        q(f.size()),
        elems(),
        pow_of_g(),
        dlog_of(q, -1),
        counts(q, 0),
        stamp(q, 0),
        stamp_payload(q, 0) {
    elems.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) elems.push_back(f.element_at(i));
    pow_of_g.reserve(q - 1);
    FieldElement acc = f.one();
    const FieldElement g = f.generator();
    for (std::uint64_t t = 0; t + 1 < q; ++t) {
      pow_of_g.push_back(acc);
      dlog_of[f.index_of(acc)] = static_cast<long long>(t);
      acc = f.mul(acc, g);
    }
  }

  struct Compiled {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;  // (dlog c, e)
    FieldElement at_zero;
  };

  Compiled compile(const SparsePoly& f) const {
    Compiled c;
    c.at_zero = f.coeff(0);  // x^0 = 1 everywhere, higher terms vanish at 0
    for (const auto& [e, coeff] : f.terms()) {
      auto cl = dlog_of[F->index_of(coeff)];
      c.terms.emplace_back(static_cast<std::uint64_t>(cl),
                           static_cast<std::uint64_t>(e) % (q - 1));
    }
    return c;
  }

  FieldElement value_at_log(const Compiled& c, std::uint64_t t) const {
    FieldElement acc = F->zero();
    for (const auto& [cl, e] : c.terms)
      acc += pow_of_g[(cl + t * e) % (q - 1)];
    return acc;
  }

  // f over all of F_q, indexed canonically.
  std::vector<FieldElement> value_table(const SparsePoly& f) const {
    Compiled c = compile(f);
    std::vector<FieldElement> vals(q, F->zero());
    vals[0] = c.at_zero;
    for (std::uint64_t t = 0; t + 1 < q; ++t)
      vals[F->index_of(pow_of_g[t])] = value_at_log(c, t);
    return vals;
  }

  const Field* F;
  std::uint64_t q;
  std::vector<FieldElement> elems;
  std::vector<FieldElement> pow_of_g;
  std::vector<long long> dlog_of;
  // reusable scratch
  std::vector<std::uint32_t> counts;
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint64_t> stamp_payload;
  std::uint32_t epoch = 0;
};

void check_odd_characteristic(const SparsePoly& f) {
  if (f.field().characteristic() == 2)
    throw EvenCharacteristicError("planarity is undefined in characteristic 2");
}

TwoToOneResult two_to_one_impl(Engine& eng, const SparsePoly& f) {
  auto vals = eng.value_table(f);
  std::fill(eng.counts.begin(), eng.counts.end(), 0);
  for (std::uint64_t i = 0; i < eng.q; ++i)
    ++eng.counts[eng.F->index_of(vals[i])];

  TwoToOneResult res;
  long long ones = 0;
  long long max_count = 0;
  std::uint64_t bad_index = eng.q;
  for (std::uint64_t v = 0; v < eng.q; ++v) {
    long long c = eng.counts[v];
    max_count = std::max(max_count, c);
    if (c == 1) {
      ++ones;
      if (ones > 1 && bad_index == eng.q) bad_index = v;
    } else if (c != 0 && c != 2 && bad_index == eng.q) {
      bad_index = v;
    }
  }
  res.histogram.assign(static_cast<std::size_t>(max_count) + 1, 0);
  for (std::uint64_t v = 0; v < eng.q; ++v)
    ++res.histogram[eng.counts[v]];
  res.two_to_one = (ones == 1) && (bad_index == eng.q);
  if (!res.two_to_one) {
    if (bad_index == eng.q) {
      // no value had exactly one preimage; report the first nonempty fiber
      for (std::uint64_t v = 0; v < eng.q && bad_index == eng.q; ++v)
        if (eng.counts[v] > 0) bad_index = v;
    }
    res.violation = PreimageExcess{eng.elems[bad_index],
                                   static_cast<long long>(eng.counts[bad_index])};
  }
  return res;
}

PlanarityReport planar_do_impl(Engine& eng, const SparsePoly& f) {
  PlanarityReport rep{false, PlanarityMethod::TwoToOne, std::monostate{}, f};
  if (!is_do_shaped(f))
    throw NotDOShapedError(
        "some exponent is not a sum of two powers of the characteristic");
  check_odd_characteristic(f);
  auto res = two_to_one_impl(eng, f);
  if (res.two_to_one) {
    rep.planar = true;
    return rep;
  }
  // A DO polynomial vanishes at 0; a second zero value is a nonzero root and
  // the crisper witness.
  Engine::Compiled c = eng.compile(f);
  for (std::uint64_t t = 0; t + 1 < eng.q; ++t)
    if (eng.value_at_log(c, t).is_zero()) {
      rep.witness = NonzeroRoot{eng.pow_of_g[t]};
      return rep;
    }
  rep.witness = *res.violation;
  return rep;
}

PlanarityReport planar_definition_impl(Engine& eng, const SparsePoly& f) {
  check_odd_characteristic(f);
  PlanarityReport rep{true, PlanarityMethod::DeltaPermutation, std::monostate{},
                      f};
  auto vals = eng.value_table(f);
  for (std::uint64_t ei = 1; ei < eng.q; ++ei) {
    const FieldElement& eps = eng.elems[ei];
    const FieldElement feps = vals[ei];
    ++eng.epoch;
    for (std::uint64_t xi = 0; xi < eng.q; ++xi) {
      FieldElement delta =
          vals[eng.F->index_of(eng.elems[xi] + eps)] - vals[xi] - feps;
      std::uint64_t vi = eng.F->index_of(delta);
      if (eng.stamp[vi] == eng.epoch) {
        rep.planar = false;
        rep.witness =
            DeltaCollision{eps, eng.elems[eng.stamp_payload[vi]], eng.elems[xi]};
        return rep;
      }
      eng.stamp[vi] = eng.epoch;
      eng.stamp_payload[vi] = xi;
    }
  }
  return rep;
}

}  // namespace

bool is_do_shaped(const SparsePoly& f) {
  for (const auto& [e, c] : f.terms())
    if (!is_p_power_sum(e, f.field().characteristic())) return false;
  return true;
}

bool is_permutation(const SparsePoly& f) {
  Engine eng(f.field());
  auto vals = eng.value_table(f);
  ++eng.epoch;
  for (std::uint64_t i = 0; i < eng.q; ++i) {
    std::uint64_t vi = eng.F->index_of(vals[i]);
    if (eng.stamp[vi] == eng.epoch) return false;
    eng.stamp[vi] = eng.epoch;
  }
  return true;
}

TwoToOneResult is_two_to_one(const SparsePoly& f) {
  Engine eng(f.field());
  return two_to_one_impl(eng, f);
}

PlanarityReport is_planar_definition(const SparsePoly& f) {
  Engine eng(f.field());
  return planar_definition_impl(eng, f);
}

PlanarityReport is_planar_do(const SparsePoly& f) {
  Engine eng(f.field());
  return planar_do_impl(eng, f);
}

PlanarSweepResult planar_set_sweep(const ParametricPoly& family,
                                   unsigned jobs) {
  const Field& F = family.field();
  const std::uint64_t q = F.size();
  // Exponent set must be a-independent: with single (coeff, a-power) weights
  // per exponent and a != 0 no instance can lose a term, but a family could
  // stack several a-powers on one exponent, so instances are shape-checked
  // individually below anyway.
  std::vector<std::uint8_t> planar(q, 0);
  std::vector<std::uint8_t> used_fast(q, 1);
  detail::parallel_for(q - 1, jobs, [&](std::size_t lo, std::size_t hi) {
    Engine eng(F);
    for (std::size_t i = lo; i < hi; ++i) {
      std::uint64_t ai = i + 1;
      SparsePoly inst = family.bind(eng.elems[ai]);
      if (is_do_shaped(inst)) {
        planar[ai] = planar_do_impl(eng, inst).planar ? 1 : 0;
      } else {
        used_fast[ai] = 0;
        planar[ai] = planar_definition_impl(eng, inst).planar ? 1 : 0;
      }
    }
  });

  PlanarSweepResult out;
  out.method = PlanarityMethod::TwoToOne;
  for (std::uint64_t i = 1; i < q; ++i) {
    if (planar[i]) out.planar_values.push_back(F.element_at(i));
    if (!used_fast[i]) out.method = PlanarityMethod::DeltaPermutation;
  }

  if (!out.planar_values.empty()) {
    Engine eng(F);
    for (int modulus : {4, 2}) {
      if ((q - 1) % static_cast<std::uint64_t>(modulus) != 0) continue;
      if (out.planar_values.size() !=
          (q - 1) / static_cast<std::uint64_t>(modulus))
        continue;
      long long residue = -1;
      bool uniform = true;
      for (const auto& a : out.planar_values) {
        long long r = eng.dlog_of[F.index_of(a)] % modulus;
        if (residue < 0) residue = r;
        if (r != residue) {
          uniform = false;
          break;
        }
      }
      if (uniform) {
        out.residue_pattern = ResiduePattern{modulus, residue};
        break;
      }
    }
  }
  return out;
}

std::optional<std::pair<FieldElement, FieldElement>> delta_root_search(
    const SparsePoly& f) {
  Engine eng(f.field());
  auto vals = eng.value_table(f);
  for (std::uint64_t xi = 1; xi < eng.q; ++xi)
    for (std::uint64_t yi = 1; yi < eng.q; ++yi) {
      FieldElement d = vals[eng.F->index_of(eng.elems[xi] + eng.elems[yi])] -
                       vals[xi] - vals[yi];
      if (d.is_zero()) return std::make_pair(eng.elems[xi], eng.elems[yi]);
    }
  return std::nullopt;
}

}  // namespace dopoly
