#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {

/// A decomposition of a word d into head·blocks·tail where the head is a
/// nonempty suffix of a set word, the blocks are set words, and tail·next is
/// a prefix of a set word. `next` is the letter the decomposition expects
/// after d. Witnesses are canonical: the shortest matching set word, ties
/// broken shortlex.
struct Interpretation {
  Word head;                 // nonempty suffix of head_witness
  std::vector<Word> blocks;  // each in the word set
  Word tail;                 // tail·next is a prefix of tail_witness
  int next;

  Word head_witness;
  Word tail_witness;

  Word word() const;         ///< head · blocks · tail
  Word middle() const;       ///< blocks flattened
  Word middle_tail() const;  ///< blocks flattened · tail

  /// Stable encoding of (head, blocks, tail, next) for ordering and dedup.
  std::string key() const;
};

bool operator==(const Interpretation& a, const Interpretation& b);

/// Validates the decomposition against the word set and fills in canonical
/// witnesses. Throws if any clause of the definition fails.
Interpretation make_interpretation(const WordSet& set, Word head, std::vector<Word> blocks,
                                   Word tail, int next);

/// Exactly the decompositions of d admitted by the word set, each valid
/// witness pair collapsed to the canonical one; deduplicated on
/// (head, blocks, tail, next) and emitted in canonical order.
std::vector<Interpretation> enumerate_interpretations(const Word& d, const WordSet& set);

/// Restriction of an interpretation to a prefix d' of its word with
/// |d'| >= |head|: keeps the head, takes the maximal run of whole blocks that
/// fits, and cuts the remainder; the expected letter is the one following d'
/// inside d·next.
Interpretation inherit(const Interpretation& interp, const Word& shorter, const WordSet& set);

/// Two decompositions of the same word whose expected letters differ.
struct DoubleInterpretation {
  Interpretation first;
  Interpretation second;

  Word word() const { return first.word(); }
  std::string key() const;
};

bool operator==(const DoubleInterpretation& a, const DoubleInterpretation& b);

DoubleInterpretation make_double(Interpretation first, Interpretation second);
DoubleInterpretation swapped(const DoubleInterpretation& di);

/// Simplicity: (1) the second decomposition's blocks·tail is a suffix of the
/// first's tail, and (2) the second head is a set word, or at least as long
/// as some set word extending first.tail·first.next. When true, both the
/// second head and the word itself are at least ⟨set⟩ long.
bool is_simple(const DoubleInterpretation& di, const WordSet& set);

/// All ordered pairs of distinct-letter interpretations of d that are simple,
/// in canonical order.
std::vector<DoubleInterpretation> enumerate_simple_doubles(const Word& d, const WordSet& set);

/// One step of the extraction descent, for diagnostics.
struct DescentStep {
  int branch;  // 1, 2, 3 following the case analysis
  Word word;   // the word before the step
};

/// Constructive extraction of a simple double interpretation from a double
/// interpretation satisfying: second.head is a set word and
/// |first.head| <= |second.head| + |second middle|. Returns the suffix e of
/// the input word together with its simple double interpretation; the word
/// length strictly decreases at every descent step.
std::pair<Word, DoubleInterpretation> extract_simple(const DoubleInterpretation& di,
                                                     const WordSet& set,
                                                     std::vector<DescentStep>* trace = nullptr);

/// A factorization cover of past·letter by set words: concatenating the
/// blocks reproduces the window starting at `offset` inside the first block.
struct Cover {
  std::vector<Word> blocks;
  std::size_t offset = 0;
};

/// Builds a simple double interpretation from a disagreement: a shared past
/// with two distinct continuation letters, each witnessed by an aligned
/// factorization cover of past·letter. Scans the window length l from twice
/// the longest set word upward until the second cover has a block boundary at
/// the window start, then extracts.
std::pair<Word, DoubleInterpretation> simple_di_from_disagreement(
    const Word& past, int a, int a_prime, const WordSet& set, const Cover& first_cover,
    const Cover& second_cover);

/// Memoized enumeration over one fixed word set. Lookups key on the word.
class InterpContext {
 public:
  explicit InterpContext(WordSet set);

  const WordSet& set() const { return set_; }
  const std::vector<Interpretation>& interpretations(const Word& w);
  std::vector<DoubleInterpretation> simple_doubles(const Word& w);
  bool word_has_simple_double(const Word& w);
  /// True when some strict suffix of w (of length >= ⟨set⟩) carries a simple
  /// double interpretation — i.e. any double interpretation of w reduces.
  bool suffix_reduces(const Word& w);

 private:
  WordSet set_;
  std::unordered_map<std::string, std::vector<Interpretation>> interp_memo_;
  std::unordered_map<std::string, bool> has_simple_memo_;
  std::unordered_map<std::string, bool> suffix_memo_;
};

}  // namespace sadic
