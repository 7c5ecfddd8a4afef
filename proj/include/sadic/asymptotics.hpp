#pragma once

#include "sadic/language.hpp"
#include "sadic/reduction.hpp"

namespace sadic {

/// A right-special word: a finite past admitting at least two one-letter
/// continuations inside the language. The finite stand-in for the shared
/// negative half-line of a disagreement pair.
struct Disagreement {
  Word past;
  std::vector<int> branches;  ///< at least two letters, ascending
};

/// All length-`depth` right-special words of the table (requires depth < cap).
std::vector<Disagreement> disagreement_pairs(const LanguageTable& lang, std::size_t depth);

struct AsymptoticReport {
  std::size_t depth = 0;                ///< deepest depth inspected
  std::size_t right_special_count = 0;  ///< at the deepest depth
  bool stabilized = false;              ///< merged counts equal at last two depths
  std::size_t class_count_estimate = 0;
  unsigned long long bound = 0;  ///< 122·K^7 with K the alphabet rank
  bool bound_ok = false;         ///< estimate within bound once stabilized
  std::size_t merge_budget = 0;  ///< right-extension length used to merge tails
  std::vector<std::size_t> depths;
  std::vector<std::size_t> per_depth_right_special;
  std::vector<std::size_t> per_depth_classes;
};

/// Estimates the number of asymptotic classes by tracking right-special
/// words across the requested depths; two same-depth words merge when one is
/// reachable from the other by extending right and trimming left within the
/// language (shift-related tails). Overcounting is possible and safe: the
/// estimate is checked against the upper bound 122·K^7. Requires at least two
/// depths and an everywhere-growing sequence.
AsymptoticReport count_asymptotic_classes(const DirectiveSequence& ds,
                                          std::vector<std::size_t> depths);

struct CoveringLevel {
  int level = 0;
  std::size_t set_size = 0;
  std::size_t set_min_length = 0;
  std::size_t set_max_length = 0;
  std::size_t len_cap = 0;
  std::size_t b_size = 0;
  unsigned long long b_bound = 0;
  bool b_bounds_ok = false;
  std::size_t pairs_checked = 0;
  std::size_t covering_failures = 0;
  std::size_t extractions = 0;  ///< disagreements pushed through the simple-d.i. pipeline
  bool extraction_ok = true;
  std::size_t max_bucket_irreducible = 0;
};

struct CoveringReport {
  std::size_t depth = 0;
  std::vector<CoveringLevel> levels;
  bool pass = false;
};

/// End-to-end check of the covering property: for each requested level n,
/// builds W_n = τ_[0,n)(A_n) and its B set, then verifies that every
/// depth-`depth` disagreement past ends in a B word, and that the
/// disagreement covers found by desubstitution extract to a simple double
/// interpretation on a suffix of the past. len_cap 0 means the default
/// min(3·|W_n|, depth).
CoveringReport verify_covering(const DirectiveSequence& ds, const std::vector<int>& levels,
                               std::size_t depth, std::size_t len_cap = 0,
                               bool force_exact = false);

}  // namespace sadic
