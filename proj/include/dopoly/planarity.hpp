#pragma once

// Planarity of concrete polynomials over F_q. Two decision routes are kept
// deliberately independent: the definition route checks that every difference
// function X -> f(X+eps) - f(X) - f(eps) permutes the field (O(q^2)), and the
// DO route uses the 2-to-1 preimage profile (O(q)), valid exactly when every
// exponent of f is a sum of two powers of p. Sweeps over the parameter a are
// partitioned across workers; each worker owns its evaluation scratch.

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "dopoly/polynomial.hpp"

namespace dopoly {

enum class PlanarityMethod { DeltaPermutation, TwoToOne };

struct DeltaCollision {  // Delta_f(., eps) maps x1 and x2 to the same value
  FieldElement eps;
  FieldElement x1;
  FieldElement x2;
};

struct NonzeroRoot {  // f(z) = 0 with z != 0; an even f cannot be 2-to-1 then
  FieldElement z;
};

struct PreimageExcess {  // value with a preimage count ruling out 2-to-1
  FieldElement value;
  long long count = 0;
};

using PlanarityWitness =
    std::variant<std::monostate, DeltaCollision, NonzeroRoot, PreimageExcess>;

struct PlanarityReport {
  bool planar = false;
  PlanarityMethod method = PlanarityMethod::DeltaPermutation;
  PlanarityWitness witness;
  SparsePoly polynomial;
};

struct TwoToOneResult {
  bool two_to_one = false;
  // histogram[c] = number of field values with exactly c preimages
  std::vector<long long> histogram;
  std::optional<PreimageExcess> violation;
};

// True iff the values of f over F_q are pairwise distinct.
bool is_permutation(const SparsePoly& f);

// Full preimage-count profile: 2-to-1 means one value has exactly one
// preimage and every other has zero or two.
TwoToOneResult is_two_to_one(const SparsePoly& f);

// True iff every exponent of f is p^i + p^j.
bool is_do_shaped(const SparsePoly& f);

// The definition route; works for any polynomial.
PlanarityReport is_planar_definition(const SparsePoly& f);

// The DO fast path: root shortcut first, then the 2-to-1 profile.
// NotDOShapedError when some exponent has no p-power decomposition.
PlanarityReport is_planar_do(const SparsePoly& f);

struct ResiduePattern {  // advisory: dlogs of the planar set mod `modulus`
  int modulus = 0;
  long long residue = 0;
};

struct PlanarSweepResult {
  std::vector<FieldElement> planar_values;  // canonical order
  std::optional<ResiduePattern> residue_pattern;
  PlanarityMethod method;
};

// Planarity of family(a) for every a in F_q^*. The family's exponents must
// not depend on a. DO-shaped instances take the 2-to-1 path, anything else
// falls back to the definition.
PlanarSweepResult planar_set_sweep(const ParametricPoly& family,
                                   unsigned jobs = 1);

// First (x, y) with x, y != 0 and f(x+y) - f(x) - f(y) = 0, in canonical
// enumeration order; the brute-force non-planarity witness.
std::optional<std::pair<FieldElement, FieldElement>> delta_root_search(
    const SparsePoly& f);

}  // namespace dopoly
