#include "sadic/morphism.hpp"

#include <algorithm>

namespace sadic {

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain_.size()))
    throw error("morphism must define exactly one image per domain letter");
  for (const Word& im : images_) {
    if (im.empty()) throw error("morphism image must be nonempty");
    if (!im.alphabet().same_as(codomain_)) throw error("morphism image over wrong alphabet");
  }
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  for (int i = 0; i < a.size(); ++i) images.push_back(Word::of_letter(a, i));
  return Morphism(a, a, std::move(images));
}

Morphism Morphism::parse(const Alphabet& domain, const Alphabet& codomain,
                         const std::vector<std::string>& image_texts) {
  std::vector<Word> images;
  for (const auto& t : image_texts) images.push_back(Word::parse(codomain, t));
  return Morphism(domain, codomain, std::move(images));
}

const Word& Morphism::image(int letter) const {
  if (letter < 0 || letter >= domain_.size()) throw error("letter outside morphism domain");
  return images_[static_cast<std::size_t>(letter)];
}

Word Morphism::apply(const Word& w) const {
  if (!w.alphabet().same_as(domain_)) throw error("apply: word not over morphism domain");
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += images_[static_cast<std::size_t>(w.at(i))].data();
  return Word(codomain_, std::move(out));
}

std::pair<Word, Word> Morphism::apply_two_sided(const Word& left, const Word& right) const {
  return {apply(left), apply(right)};
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.front().size();
  for (const Word& im : images_) m = std::min(m, im.size());
  return m;
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& im : images_) m = std::max(m, im.size());
  return m;
}

std::size_t Morphism::total_image_length() const {
  std::size_t t = 0;
  for (const Word& im : images_) t += im.size();
  return t;
}

bool Morphism::is_primitive() const {
  for (const Word& im : images_) {
    std::vector<char> seen(static_cast<std::size_t>(codomain_.size()), 0);
    for (std::size_t i = 0; i < im.size(); ++i) seen[static_cast<std::size_t>(im.at(i))] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (!a.domain_.same_as(b.domain_) || !a.codomain_.same_as(b.codomain_)) return false;
  return a.images_ == b.images_;
}

Morphism compose(const Morphism& outer, const Morphism& inner, std::size_t size_cap) {
  if (!inner.codomain().same_as(outer.domain()))
    throw error("compose: codomain of inner morphism must equal domain of outer");
  std::vector<Word> images;
  std::size_t total = 0;
  for (int a = 0; a < inner.domain().size(); ++a) {
    Word im = outer.apply(inner.image(a));
    total += im.size();
    if (total > size_cap)
      throw error("compose: total image length exceeds cap of " + std::to_string(size_cap));
    images.push_back(std::move(im));
  }
  return Morphism(inner.domain(), outer.codomain(), std::move(images));
}

}  // namespace sadic
