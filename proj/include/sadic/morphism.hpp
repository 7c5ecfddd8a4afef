#pragma once

#include <utility>
#include <vector>

#include "sadic/word.hpp"

namespace sadic {

/// Default cap on the total number of symbols across all images produced by a
/// composition; guards against runaway growth in long composition ranges.
inline constexpr std::size_t kDefaultComposeCap = 1'000'000;

/// A free-semigroup morphism: a total map letter -> nonempty word, extended
/// to words by concatenation. Value object; equality is structural.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  static Morphism identity(const Alphabet& a);
  /// Builds an endomorphism from rule texts in domain-letter order.
  static Morphism parse(const Alphabet& domain, const Alphabet& codomain,
                        const std::vector<std::string>& image_texts);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(int letter) const;

  Word apply(const Word& w) const;
  /// Applies the morphism to the two sides of a bi-infinite window split at
  /// coordinate zero; the seam stays between the two outputs.
  std::pair<Word, Word> apply_two_sided(const Word& left, const Word& right) const;

  std::size_t min_image_length() const;  ///< ⟨τ⟩
  std::size_t max_image_length() const;
  std::size_t total_image_length() const;

  /// Every codomain letter occurs in every image.
  bool is_primitive() const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

/// outer ∘ inner: letter a -> outer(inner(a)). Requires
/// codomain(inner) == domain(outer). Throws if the result exceeds size_cap
/// total image symbols.
Morphism compose(const Morphism& outer, const Morphism& inner,
                 std::size_t size_cap = kDefaultComposeCap);

}  // namespace sadic
