#include "sadic/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sadic {

SlidingBlockCode::SlidingBlockCode(std::size_t radius, std::vector<Word> windows,
                                   std::vector<int> values)
    : radius_(radius), windows_(std::move(windows)), values_(std::move(values)) {
  if (windows_.size() != values_.size()) throw error("sliding block code shape mismatch");
  for (const Word& w : windows_)
    if (w.size() != 2 * radius_ + 1) throw error("sliding block window of wrong length");
  for (std::size_t i = 0; i + 1 < windows_.size(); ++i)
    if (!(windows_[i].data() < windows_[i + 1].data()))
      throw error("sliding block windows must be sorted and distinct");
}

SlidingBlockCode SlidingBlockCode::shift_power(const LanguageTable& lang, std::size_t radius,
                                               int k) {
  if (static_cast<std::size_t>(k < 0 ? -k : k) > radius)
    throw error("shift power outside the radius");
  std::vector<Word> windows = lang.words_of_length(2 * radius + 1);
  std::vector<int> values;
  for (const Word& w : windows)
    values.push_back(w.at(static_cast<std::size_t>(static_cast<int>(radius) + k)));
  return SlidingBlockCode(radius, std::move(windows), std::move(values));
}

int SlidingBlockCode::value_of(const std::string& window_data) const {
  auto it = std::lower_bound(windows_.begin(), windows_.end(), window_data,
                             [](const Word& w, const std::string& s) { return w.data() < s; });
  if (it == windows_.end() || it->data() != window_data) return 0;
  return values_[static_cast<std::size_t>(it - windows_.begin())];
}

Word SlidingBlockCode::apply(const Word& w) const {
  std::size_t width = 2 * radius_ + 1;
  if (w.size() < width) throw error("sliding block input shorter than the window");
  std::string out;
  for (std::size_t i = 0; i + width <= w.size(); ++i)
    out.push_back(static_cast<char>(value_of(w.data().substr(i, width))));
  return Word(w.alphabet(), std::move(out));
}

std::string SlidingBlockCode::key() const {
  std::string k = std::to_string(radius_) + ":";
  for (int v : values_) k.push_back(static_cast<char>(v));
  return k;
}

bool operator==(const SlidingBlockCode& a, const SlidingBlockCode& b) {
  return a.radius() == b.radius() && a.values() == b.values() &&
         a.windows().size() == b.windows().size();
}

namespace {

struct SearchSetup {
  std::vector<std::string> windows;                  // sorted window data
  std::map<std::string, std::size_t> index;          // window -> position
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency;
  // adjacency[i] lists (j, orientation): windows i,j overlap inside some
  // language (2r+2)-word; orientation 0 means i is the left window.
  std::vector<std::string> long_words;  // language words of length 2r+1+depth
};

// Verifies the full-depth image condition and derives the inverse; returns
// true (and the inverse values) only for candidates whose inverse is total,
// radius <= r, language-preserving, and two-sided on all 4r+1 windows.
bool finish_candidate(const LanguageTable& lang, std::size_t radius,
                      const SearchSetup& setup, const std::vector<int>& values) {
  std::size_t width = 2 * radius + 1;
  auto slide = [&](const std::string& in, const std::vector<int>& vals) {
    std::string out;
    for (std::size_t i = 0; i + width <= in.size(); ++i) {
      auto it = setup.index.find(in.substr(i, width));
      if (it == setup.index.end()) return std::optional<std::string>{};
      int v = vals[it->second];
      if (v < 0) return std::optional<std::string>{};
      out.push_back(static_cast<char>(v));
    }
    return std::optional<std::string>{std::move(out)};
  };

  // Language preservation at full depth.
  for (const std::string& w : setup.long_words) {
    auto img = slide(w, values);
    if (!img || !lang.contains_data(*img)) return false;
  }

  // Inverse derivation from (4r+1)-windows: the image window determines the
  // center of its preimage.
  std::vector<int> inverse(setup.windows.size(), -1);
  std::size_t inv_width = 4 * radius + 1;
  std::vector<Word> mid_words = lang.words_of_length(inv_width);
  for (const Word& w : mid_words) {
    auto img = slide(w.data(), values);
    if (!img) return false;
    auto it = setup.index.find(*img);
    if (it == setup.index.end()) return false;  // image window must be in the language
    int center = w.at(2 * radius);
    if (inverse[it->second] >= 0 && inverse[it->second] != center) return false;
    inverse[it->second] = center;
  }
  for (int v : inverse)
    if (v < 0) return false;  // inverse must be total on language windows

  // Inverse preserves the language to depth and the composite the other way
  // around is also the identity on the (4r+1)-windows.
  for (const std::string& w : setup.long_words) {
    auto img = slide(w, inverse);
    if (!img || !lang.contains_data(*img)) return false;
  }
  for (const Word& w : mid_words) {
    auto img = slide(w.data(), inverse);
    if (!img) return false;
    auto back = setup.index.find(*img);
    if (back == setup.index.end()) return false;
    if (values[back->second] != w.at(2 * radius)) return false;
  }
  return true;
}

}  // namespace

std::vector<SlidingBlockCode> enumerate_automorphism_candidates(const LanguageTable& lang,
                                                                std::size_t radius,
                                                                std::size_t depth) {
  std::size_t width = 2 * radius + 1;
  if (lang.cap() < width + depth)
    throw error("enumerate_automorphism_candidates: cap below 2r+1+depth");

  SearchSetup setup;
  for (const Word& w : lang.words_of_length(width)) setup.windows.push_back(w.data());
  for (std::size_t i = 0; i < setup.windows.size(); ++i) setup.index[setup.windows[i]] = i;
  setup.adjacency.resize(setup.windows.size());
  for (const Word& u : lang.words_of_length(width + 1)) {
    std::size_t left = setup.index.at(u.data().substr(0, width));
    std::size_t right = setup.index.at(u.data().substr(1));
    setup.adjacency[left].push_back({right, 0});
    setup.adjacency[right].push_back({left, 1});
  }
  for (const Word& w : lang.words_of_length(width + depth))
    setup.long_words.push_back(w.data());

  // Assign windows in a breadth-first order over the overlap graph so the
  // bigram prune bites early.
  std::vector<std::size_t> order;
  std::vector<char> queued(setup.windows.size(), 0);
  for (std::size_t seed = 0; seed < setup.windows.size(); ++seed) {
    if (queued[seed]) continue;
    std::vector<std::size_t> queue{seed};
    queued[seed] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t v = queue[qi];
      order.push_back(v);
      for (const auto& edge : setup.adjacency[v])
        if (!queued[edge.first]) { queued[edge.first] = 1; queue.push_back(edge.first); }
    }
  }

  int letters = lang.alphabet().size();
  std::vector<int> values(setup.windows.size(), -1);
  std::vector<SlidingBlockCode> out;

  auto bigram_ok = [&](std::size_t v) {
    for (auto [u, orient] : setup.adjacency[v]) {
      if (values[u] < 0) continue;
      std::string pair(2, 0);
      if (orient == 0) {  // v left, u right
        pair[0] = static_cast<char>(values[v]);
        pair[1] = static_cast<char>(values[u]);
      } else {
        pair[0] = static_cast<char>(values[u]);
        pair[1] = static_cast<char>(values[v]);
      }
      if (!lang.contains_data(pair)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      if (finish_candidate(lang, radius, setup, values)) {
        std::vector<Word> windows;
        for (const std::string& s : setup.windows) windows.emplace_back(lang.alphabet(), s);
        out.emplace_back(radius, std::move(windows), values);
      }
      return;
    }
    std::size_t v = order[pos];
    for (int c = 0; c < letters; ++c) {
      values[v] = c;
      if (bigram_ok(v)) self(self, pos + 1);
    }
    values[v] = -1;
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), [](const SlidingBlockCode& a, const SlidingBlockCode& b) {
    return a.key() < b.key();
  });
  return out;
}

std::size_t quotient_census(const std::vector<SlidingBlockCode>& candidates,
                            const LanguageTable& lang) {
  if (candidates.empty()) return 0;
  std::size_t radius = candidates.front().radius();
  std::size_t width = 2 * radius + 1;

  // φ' = T^k ∘ φ over all language words wide enough to evaluate both sides.
  auto shift_related = [&](const SlidingBlockCode& phi, const SlidingBlockCode& psi, int k) {
    std::size_t span = width + static_cast<std::size_t>(k < 0 ? -k : k);
    for (const Word& u : lang.words_of_length(span)) {
      const std::string& s = u.data();
      std::string left = k >= 0 ? s.substr(0, width) : s.substr(static_cast<std::size_t>(-k));
      std::string right = k >= 0 ? s.substr(static_cast<std::size_t>(k)) : s.substr(0, width);
      if (psi.value_of(left) != phi.value_of(right)) return false;
    }
    return true;
  };

  std::vector<std::size_t> parent(candidates.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int max_shift = static_cast<int>(2 * radius);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      for (int k = -max_shift; k <= max_shift; ++k)
        if (shift_related(candidates[i], candidates[j], k)) {
          parent[find(i)] = find(j);
          break;
        }
  std::size_t classes = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (find(i) == i) ++classes;
  return classes;
}

FactorialCheck check_factorial_bound(std::size_t census, const AsymptoticReport& asym) {
  if (!asym.stabilized) throw error("check_factorial_bound requires a stabilized estimate");
  FactorialCheck check;
  check.census = census;
  check.estimate = asym.class_count_estimate;
  unsigned long long fact = 1;
  for (std::size_t i = 2; i <= check.estimate; ++i) {
    if (fact > (~0ULL) / i) { check.saturated = true; break; }
    fact *= i;
  }
  check.factorial = check.saturated ? ~0ULL : fact;
  check.ok = check.saturated || census <= check.factorial;
  return check;
}

}  // namespace sadic
