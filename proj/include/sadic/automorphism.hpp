#pragma once

#include "sadic/asymptotics.hpp"
#include "sadic/language.hpp"

namespace sadic {

/// A radius-r sliding block code: a total rule from the language words of
/// length 2r+1 to letters. Values on non-language windows are canonicalized
/// to letter 0.
class SlidingBlockCode {
 public:
  SlidingBlockCode(std::size_t radius, std::vector<Word> windows, std::vector<int> values);

  static SlidingBlockCode shift_power(const LanguageTable& lang, std::size_t radius, int k);

  std::size_t radius() const { return radius_; }
  const std::vector<Word>& windows() const { return windows_; }
  const std::vector<int>& values() const { return values_; }

  int value_of(const std::string& window_data) const;  ///< letter 0 if unknown
  /// Slides over w (|w| >= 2r+1) producing a word of length |w| - 2r.
  Word apply(const Word& w) const;

  std::string key() const;

 private:
  std::size_t radius_;
  std::vector<Word> windows_;  // sorted by data
  std::vector<int> values_;
};

bool operator==(const SlidingBlockCode& a, const SlidingBlockCode& b);

/// All radius-r codes that map every language word of length 2r+1+depth into
/// the language and admit a derivable two-sided inverse of radius <= r,
/// verified to the same depth. Includes the identity and every shift power
/// representable within the radius. Requires cap >= 2r+1+depth.
std::vector<SlidingBlockCode> enumerate_automorphism_candidates(const LanguageTable& lang,
                                                                std::size_t radius,
                                                                std::size_t depth);

/// Number of candidates modulo composition with coordinate translations
/// representable at the working radius.
std::size_t quotient_census(const std::vector<SlidingBlockCode>& candidates,
                            const LanguageTable& lang);

struct FactorialCheck {
  bool ok = false;
  std::size_t census = 0;
  std::size_t estimate = 0;
  unsigned long long factorial = 0;
  bool saturated = false;  ///< factorial exceeded 64 bits; bound trivially holds
};

/// census <= (class count estimate)! — requires a stabilized report.
FactorialCheck check_factorial_bound(std::size_t census, const AsymptoticReport& asym);

}  // namespace sadic
