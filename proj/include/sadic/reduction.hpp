#pragma once

#include <map>
#include <optional>
#include <string>

#include "sadic/interpretation.hpp"

namespace sadic {

/// The six-coordinate bucket label classifying a simple double
/// interpretation: constraints on the first decomposition's middle and tail
/// witness, on the second decomposition's head, leading middle block and tail
/// witness, and the longest block of the second middle.
struct Profile {
  Word first_mid_last;     ///< last block of the first middle (or head cover)
  Word first_tail_cover;   ///< shortest set word extending first.tail·next
  Word second_head_cover;  ///< shortest set word with second.head as suffix
  Word second_mid_first;   ///< first block of the second middle (free if empty)
  Word second_tail_cover;  ///< a set word extending second.tail·next
  std::size_t second_block_cap = 0;  ///< longest second-middle block, 0 if empty

  std::string key() const;
  std::string str() const;
};

bool operator==(const Profile& a, const Profile& b);

/// All profiles whose bucket contains this simple double interpretation.
/// Nonempty for every simple input.
std::vector<Profile> classify(const DoubleInterpretation& di, const WordSet& set);

/// d̃: the part of the first tail left of the second decomposition's
/// blocks·tail — equally, the part of the second head right of the first
/// head·middle. Both routes are computed and must agree.
Word overhang(const DoubleInterpretation& di, const WordSet& set);

/// Words share their trailing ⟨set⟩ letters.
bool equivalent(const DoubleInterpretation& a, const DoubleInterpretation& b,
                const WordSet& set);

/// The word of `to` is a strict suffix of the word of `from`.
bool reduces_to(const DoubleInterpretation& from, const DoubleInterpretation& to);

/// Some simple double interpretation living on a strict suffix of the word,
/// or nullopt. Canonical-first when present.
std::optional<DoubleInterpretation> find_reduction(const DoubleInterpretation& di,
                                                   InterpContext& ctx);

struct IrreducibilityCheck {
  bool irreducible = true;
  std::string witness;  ///< human-readable violation, empty when irreducible
};

/// A set is reducible when two different members are equivalent or some
/// member reduces; the empty set is irreducible.
IrreducibilityCheck is_irreducible(const std::vector<DoubleInterpretation>& members,
                                   InterpContext& ctx);

/// Witness conditions under which two distinct same-bucket elements form a
/// reducible pair.
enum class ReduxCondition { prefix_dependent, equal_tail, overhang_sandwich };

const char* redux_condition_name(ReduxCondition c);

/// First matching condition, or nullopt. Requires distinct inputs sharing at
/// least one profile.
std::optional<ReduxCondition> redux_witness(const DoubleInterpretation& a,
                                            const DoubleInterpretation& b, const WordSet& set);

/// Greedy maximal reduction chain from di: repeatedly steps to the
/// canonical-first simple double interpretation on a strict suffix. Word
/// lengths strictly decrease; the last element has no reduction.
std::vector<DoubleInterpretation> reduction_chain(const DoubleInterpretation& di,
                                                  InterpContext& ctx);

struct IrreducibleSubset {
  std::vector<std::size_t> chosen;  ///< indices into the bucket
  bool exact = false;               ///< exact search vs greedy
};

/// A maximal irreducible subset of the bucket: exact maximum cardinality via
/// branch and bound when requested (or when the eligible-member count is at
/// most exact_threshold), greedy insertion in canonical order otherwise.
IrreducibleSubset max_irreducible_subset(const std::vector<DoubleInterpretation>& bucket,
                                         InterpContext& ctx, bool force_exact,
                                         std::size_t exact_threshold = 24);

struct BucketReport {
  Profile profile;
  std::size_t member_count = 0;
  std::size_t non_reducing_count = 0;  ///< members with no reduction
  std::size_t irreducible_size = 0;
  bool exact = false;
  std::size_t per_bucket_bound = 0;  ///< 61·#set
};

struct BSetResult {
  std::vector<Word> words;  ///< the set B, shortlex-sorted
  std::vector<BucketReport> buckets;
  std::size_t interpretable_word_count = 0;
  std::size_t simple_double_count = 0;
  unsigned long long cardinality_bound = 0;  ///< 122·(#set)^7
  std::size_t max_bucket_irreducible = 0;
  bool bounds_ok = false;
};

/// All words of length <= len_cap admitting at least one interpretation:
/// head·blocks·tail shapes over the set, deduplicated, shortlex order.
std::vector<Word> interpretable_words(const WordSet& set, std::size_t len_cap);

/// Enumerates every simple double interpretation on words up to len_cap,
/// buckets them by profile, fixes a maximal irreducible subset per bucket,
/// and collects the length-⟨set⟩ suffixes of the chosen words.
BSetResult build_b_set(const WordSet& set, std::size_t len_cap, bool force_exact,
                       InterpContext* shared_ctx = nullptr);

}  // namespace sadic
