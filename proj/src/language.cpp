#include "sadic/language.hpp"

#include <algorithm>

namespace sadic {

LanguageTable::LanguageTable(Alphabet a, std::size_t cap, int level, int stabilized_at)
    : alphabet_(std::move(a)), cap_(cap), level_(level), stabilized_at_(stabilized_at) {
  if (cap_ < 1) throw error("language cap must be at least 1");
  by_len_.resize(cap_ + 1);
}

LanguageTable LanguageTable::from_words(const Alphabet& a, std::size_t cap,
                                        const std::vector<Word>& members, int level,
                                        int stabilized_at) {
  LanguageTable table(a, cap, level, stabilized_at);
  // Insert the longest windows, then close downwards: every (l-1)-subword of
  // a length-l word is its prefix or its suffix.
  for (const Word& w : members) {
    if (!w.alphabet().same_as(a)) throw error("language member over wrong alphabet");
    if (w.empty() || w.size() > cap) throw error("language member length out of range");
    const std::string& s = w.data();
    if (w.size() == cap)
      table.by_len_[cap].insert(s);
    else
      table.by_len_[w.size()].insert(s);
  }
  for (std::size_t len = cap; len >= 2; --len) {
    for (const std::string& s : table.by_len_[len]) {
      table.by_len_[len - 1].insert(s.substr(0, len - 1));
      table.by_len_[len - 1].insert(s.substr(1));
    }
  }
  return table;
}

LanguageTable LanguageTable::full_shift(const Alphabet& a, std::size_t cap) {
  if (cap > 20) throw error("full shift table cap too large");
  std::vector<Word> members;
  std::string cur;
  auto rec = [&](auto&& self, std::size_t len) -> void {
    if (len == cap) {
      members.emplace_back(a, cur);
      return;
    }
    for (int c = 0; c < a.size(); ++c) {
      cur.push_back(static_cast<char>(c));
      self(self, len + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return from_words(a, cap, members);
}

bool LanguageTable::contains(const Word& w) const {
  if (!w.alphabet().same_as(alphabet_)) throw error("language lookup over wrong alphabet");
  return contains_data(w.data());
}

bool LanguageTable::contains_data(const std::string& letters) const {
  if (letters.empty()) return true;
  if (letters.size() > cap_) throw error("language lookup beyond table cap");
  return by_len_[letters.size()].count(letters) > 0;
}

std::size_t LanguageTable::count_of_length(std::size_t len) const {
  if (len < 1 || len > cap_) throw error("language length out of range");
  return by_len_[len].size();
}

std::vector<Word> LanguageTable::words_of_length(std::size_t len) const {
  if (len < 1 || len > cap_) throw error("language length out of range");
  std::vector<std::string> raw(by_len_[len].begin(), by_len_[len].end());
  std::sort(raw.begin(), raw.end());
  std::vector<Word> out;
  out.reserve(raw.size());
  for (auto& s : raw) out.emplace_back(alphabet_, std::move(s));
  return out;
}

std::vector<int> LanguageTable::right_extensions(const Word& w) const {
  if (w.size() + 1 > cap_) throw error("right extensions need |w| < cap");
  std::vector<int> out;
  std::string probe = w.data();
  probe.push_back(0);
  for (int c = 0; c < alphabet_.size(); ++c) {
    probe.back() = static_cast<char>(c);
    if (by_len_[probe.size()].count(probe)) out.push_back(c);
  }
  return out;
}

namespace {

// Distinct length-min(cap,|image|) windows of all images of sigma.
std::unordered_set<std::string> top_windows(const Morphism& sigma, std::size_t cap) {
  std::unordered_set<std::string> windows;
  for (int a = 0; a < sigma.domain().size(); ++a) {
    const std::string& s = sigma.image(a).data();
    std::size_t len = std::min(cap, s.size());
    for (std::size_t pos = 0; pos + len <= s.size(); ++pos)
      windows.insert(s.substr(pos, len));
  }
  return windows;
}

}  // namespace

LanguageTable level_language(const DirectiveSequence& ds, int level, std::size_t cap) {
  if (cap < 1) throw error("level_language cap must be at least 1");
  if (level < 0 || level >= ds.max_defined_level())
    throw error("level_language: level outside schedule");

  Morphism sigma = ds.morphism_at(level);
  int N = level + 1;
  // Advance until images are at least cap long, then until the window sets of
  // two consecutive N agree. Comparing only full-length windows is enough:
  // once images are >= cap long, every shorter factor sits inside one.
  std::unordered_set<std::string> prev;
  bool have_prev = false;
  while (true) {
    if (sigma.min_image_length() >= cap) {
      auto cur = top_windows(sigma, cap);
      if (have_prev && cur == prev) {
        std::vector<Word> members;
        members.reserve(cur.size());
        for (const auto& s : cur) members.emplace_back(ds.level_alphabet(level), s);
        return LanguageTable::from_words(ds.level_alphabet(level), cap, members, level, N);
      }
      prev = std::move(cur);
      have_prev = true;
    }
    if (N >= ds.max_defined_level())
      throw error("level_language: horizon exhausted before stabilization");
    sigma = compose(sigma, ds.morphism_at(N));
    ++N;
  }
}

std::vector<Desubstitution> desubstitute(const DirectiveSequence& ds, int n, int N,
                                         const Word& window) {
  if (n < 0 || n >= N) throw error("desubstitute requires 0 <= n < N");
  if (window.empty()) throw error("desubstitute window must be nonempty");
  LanguageTable lang_n = level_language(ds, n, window.size());
  if (!lang_n.contains(window))
    throw error("desubstitute: window is not in the level language");

  Morphism sigma = ds.compose_range(n, N);
  std::size_t min_len = sigma.min_image_length();
  std::size_t m_max = 2 + window.size() / std::max<std::size_t>(min_len, 1);
  LanguageTable lang_N = level_language(ds, N, m_max);

  std::vector<Desubstitution> covers;
  const std::string& target = window.data();
  for (std::size_t m = 1; m <= m_max; ++m) {
    for (const Word& y : lang_N.words_of_length(m)) {
      std::string img;
      for (std::size_t i = 0; i < y.size(); ++i) img += sigma.image(y.at(i)).data();
      std::size_t first_len = sigma.image(y.at(0)).size();
      std::size_t last_len = sigma.image(y.at(m - 1)).size();
      for (std::size_t k = 0; k < first_len; ++k) {
        if (k + target.size() > img.size()) break;
        if (k + target.size() <= img.size() - last_len) continue;  // last block unused
        if (img.compare(k, target.size(), target) != 0) continue;
        Desubstitution d;
        d.offset = k;
        for (std::size_t i = 0; i < y.size(); ++i) d.letters.push_back(y.at(i));
        covers.push_back(std::move(d));
      }
    }
  }
  return covers;
}

}  // namespace sadic
