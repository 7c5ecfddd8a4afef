#pragma once

#include <vector>

#include "sadic/morphism.hpp"

namespace sadic {

/// A directive sequence of morphisms τ_n: A_{n+1}+ -> A_n+, represented as a
/// finite head followed by an optional cycle repeated forever (eventually
/// periodic). An empty cycle means the sequence is explicit and finite. The
/// horizon bounds how far any computation may look.
class DirectiveSequence {
 public:
  DirectiveSequence(std::vector<Morphism> head, std::vector<Morphism> cycle, int horizon);

  static DirectiveSequence stationary(const Morphism& m, int horizon);

  bool periodic() const { return !cycle_.empty(); }
  int horizon() const { return horizon_; }
  std::size_t head_size() const { return head_.size(); }
  std::size_t cycle_size() const { return cycle_.size(); }

  /// Largest level index n for which τ_n is defined (capped by horizon).
  int max_defined_level() const;

  const Morphism& morphism_at(int n) const;
  Alphabet level_alphabet(int n) const;

  /// τ_[n,N) = τ_n ∘ τ_{n+1} ∘ ... ∘ τ_{N-1}; requires 0 <= n < N <= horizon.
  Morphism compose_range(int n, int N, std::size_t size_cap = kDefaultComposeCap) const;

  /// W_n = τ_[0,n)(A_n) as a deduplicated word set (n >= 1).
  WordSet level_word_set(int n, std::size_t size_cap = kDefaultComposeCap) const;

 private:
  std::vector<Morphism> head_;
  std::vector<Morphism> cycle_;
  int horizon_;
};

/// liminf of level alphabet sizes. Exact for periodic schedules (minimum over
/// the repeating block); for explicit finite schedules this is the minimum
/// over the declared levels past 0 and is only horizon-bounded.
int alphabet_rank(const DirectiveSequence& ds);

struct GrowthReport {
  bool everywhere_growing = false;
  /// ⟨τ_[0,N)⟩ for N = 0, 1, ..., up to the inspected horizon.
  std::vector<std::size_t> trace;
  /// True when the verdict is exact (periodic schedule), false when it only
  /// reflects the declared finite horizon.
  bool exact = false;
};

/// Everywhere-growing check. For periodic schedules the verdict is exact:
/// with σ the composed cycle block over alphabet A, the minimum image length
/// of σ^k is nondecreasing and the sequence is unbounded iff a strict rise
/// happens within the first #A consecutive periods. Explicit schedules are
/// judged by whether the trace ever rises before the horizon.
GrowthReport is_everywhere_growing(const DirectiveSequence& ds, int horizon);

/// Regroups the sequence along the given cuts (strictly increasing, starting
/// at 0). When the input has a periodic tail and the final cut step lands
/// compatibly on it, the contraction keeps a periodic tail as well; otherwise
/// the result is explicit and finite.
DirectiveSequence contract(const DirectiveSequence& ds, const std::vector<int>& cuts);

}  // namespace sadic
