#pragma once

#include <unordered_set>
#include <vector>

#include "sadic/directive.hpp"

namespace sadic {

/// The factors of one level of an S-adic subshift, up to a length cap.
/// Factor-closed by construction: membership of a word implies membership of
/// all its subwords.
class LanguageTable {
 public:
  /// Builds the factor closure of the given members (each of length <= cap).
  static LanguageTable from_words(const Alphabet& a, std::size_t cap,
                                  const std::vector<Word>& members, int level = 0,
                                  int stabilized_at = -1);
  /// Every word of length <= cap; cap is deliberately limited (<= 20).
  static LanguageTable full_shift(const Alphabet& a, std::size_t cap);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t cap() const { return cap_; }
  int level() const { return level_; }
  /// The N at which the defining image-factor sets stabilized; -1 when the
  /// table was built directly from words.
  int stabilized_at() const { return stabilized_at_; }

  bool contains(const Word& w) const;
  bool contains_data(const std::string& letters) const;
  std::size_t count_of_length(std::size_t len) const;
  std::vector<Word> words_of_length(std::size_t len) const;  ///< shortlex-sorted
  /// Letters c with w·c in the table (requires |w| < cap).
  std::vector<int> right_extensions(const Word& w) const;

 private:
  LanguageTable(Alphabet a, std::size_t cap, int level, int stabilized_at);

  Alphabet alphabet_;
  std::size_t cap_;
  int level_;
  int stabilized_at_;
  std::vector<std::unordered_set<std::string>> by_len_;  // index 1..cap
};

/// Factors of length <= cap of level n, computed by raising N until two
/// consecutive image-factor sets agree (and the composed images are at least
/// cap long, so closure is saturated). Throws if the horizon is exhausted
/// before stabilization.
LanguageTable level_language(const DirectiveSequence& ds, int level, std::size_t cap);

/// One way to realize a window inside the image of a level-N word y: the
/// letters of y, and the offset of the window start inside the image of the
/// first letter.
struct Desubstitution {
  std::vector<int> letters;  // over A_N
  std::size_t offset;        // window start within image of letters.front()
};

/// All covers of the window by images of level-N language words, per the
/// level-relation lemma; the window must belong to level n's language.
std::vector<Desubstitution> desubstitute(const DirectiveSequence& ds, int n, int N,
                                         const Word& window);

}  // namespace sadic
