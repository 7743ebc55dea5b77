#pragma once

// The built-in catalog of planar classification claims: the known planar
// families with their exact parameter sets, and the complementary
// non-planarity sweeps. Each claim re-derives its set by sweep and diffs it
// against the expected description. max_e caps the extension degrees
// visited; the largest odd case is sampled instead of swept and is flagged
// partial.

#include <cstdint>
#include <string>
#include <vector>

#include "dopoly/planarity.hpp"

namespace dopoly {

struct ClaimResult {
  std::string name;
  bool pass = false;
  bool partial = false;  // sampled evidence, not a full sweep
  std::string details;
};

std::vector<ClaimResult> run_planar_catalog(int max_e = 5, unsigned jobs = 1,
                                            std::uint64_t seed = 20260810);

// Sampled check that family(a) is planar exactly for non-square a: draws
// n_each squares and n_each non-squares deterministically from the seed.
struct SampleCheck {
  int squares_tested = 0;
  int nonsquares_tested = 0;
  bool pass = false;
};

SampleCheck sample_square_dichotomy(const Field& field,
                                    const std::string& family, int n_each,
                                    std::uint64_t seed);

}  // namespace dopoly
