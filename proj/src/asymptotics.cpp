#include "sadic/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sadic {

std::vector<Disagreement> disagreement_pairs(const LanguageTable& lang, std::size_t depth) {
  if (depth + 1 > lang.cap()) throw error("disagreement_pairs needs depth < cap");
  if (depth < 1) throw error("disagreement_pairs needs a positive depth");
  std::vector<Disagreement> out;
  for (const Word& w : lang.words_of_length(depth)) {
    std::vector<int> ext = lang.right_extensions(w);
    if (ext.size() >= 2) out.push_back({w, std::move(ext)});
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

// Shift-relation between deep right-special windows: extending one deep
// window rightward inside the language reaches the other's full-depth window.
// The witness overlap is |deep| - |t| letters, so with a modest budget the
// evidence is long and unrelated reoccurrences do not merge tails.
UnionFind shift_merge(const LanguageTable& lang, const std::vector<std::string>& deep,
                      std::size_t budget) {
  UnionFind uf(deep.size());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < deep.size(); ++i) index[deep[i]] = i;
  for (std::size_t i = 0; i < deep.size(); ++i) {
    std::vector<std::string> frontier{deep[i]};
    for (std::size_t step = 0; step < budget && !frontier.empty(); ++step) {
      std::vector<std::string> next;
      for (const std::string& cur : frontier) {
        for (int c = 0; c < lang.alphabet().size(); ++c) {
          std::string ext = cur;
          ext.push_back(static_cast<char>(c));
          if (!lang.contains_data(ext)) continue;
          auto hit = index.find(ext.substr(ext.size() - deep[i].size()));
          if (hit != index.end() && hit->second != i) uf.unite(i, hit->second);
          next.push_back(std::move(ext));
        }
      }
      frontier = std::move(next);
    }
  }
  return uf;
}

// Classes visible at window length `depth`: the deep shift-merge classes,
// further collapsed when their depth-suffixes coincide (the windows are still
// too short to tell the tails apart).
std::size_t merged_class_count(const UnionFind& merged, std::size_t depth,
                               const std::vector<std::string>& deep) {
  UnionFind uf = merged;
  std::map<std::string, std::size_t> proj;
  for (std::size_t i = 0; i < deep.size(); ++i) {
    std::string s = deep[i].substr(deep[i].size() - depth);
    auto [it, fresh] = proj.emplace(std::move(s), i);
    if (!fresh) uf.unite(i, it->second);
  }
  return uf.classes();
}

}  // namespace

AsymptoticReport count_asymptotic_classes(const DirectiveSequence& ds,
                                          std::vector<std::size_t> depths) {
  if (depths.size() < 2) throw error("count_asymptotic_classes needs at least two depths");
  std::sort(depths.begin(), depths.end());
  if (depths.front() < 1) throw error("depths must be positive");

  GrowthReport growth = is_everywhere_growing(ds, ds.horizon());
  if (!growth.everywhere_growing)
    throw error("count_asymptotic_classes requires an everywhere-growing sequence");

  AsymptoticReport report;
  report.depths = depths;
  report.depth = depths.back();
  report.merge_budget = std::max<std::size_t>(depths.back() / 4, 4);
  std::size_t cap = depths.back() + 1 + report.merge_budget;
  LanguageTable lang = level_language(ds, 0, cap);

  // Only tails that persist to the deepest depth count as classes: a
  // shallower right-special word whose extensions die out is transient. The
  // suffix of a deeper right-special word is itself right-special, so the
  // depth-L snapshot of the tails is the set of length-L suffixes of the
  // deepest right-special windows.
  auto deepest_pairs = disagreement_pairs(lang, depths.back());
  std::vector<std::string> deepest;
  for (const Disagreement& d : deepest_pairs) deepest.push_back(d.past.data());
  UnionFind merged = shift_merge(lang, deepest, report.merge_budget);
  for (std::size_t L : depths) {
    report.per_depth_right_special.push_back(disagreement_pairs(lang, L).size());
    report.per_depth_classes.push_back(merged_class_count(merged, L, deepest));
  }
  report.right_special_count = report.per_depth_right_special.back();
  report.class_count_estimate = report.per_depth_classes.back();
  std::size_t k = report.per_depth_classes.size();
  report.stabilized = report.per_depth_classes[k - 1] == report.per_depth_classes[k - 2];

  unsigned long long rank = static_cast<unsigned long long>(alphabet_rank(ds));
  report.bound = 122ULL;
  for (int i = 0; i < 7; ++i) report.bound *= rank;
  report.bound_ok = !report.stabilized || report.class_count_estimate <= report.bound;
  return report;
}

CoveringReport verify_covering(const DirectiveSequence& ds, const std::vector<int>& levels,
                               std::size_t depth, std::size_t len_cap, bool force_exact) {
  CoveringReport report;
  report.depth = depth;
  LanguageTable lang = level_language(ds, 0, depth + 1);
  auto pairs = disagreement_pairs(lang, depth);

  bool pass = true;
  for (int n : levels) {
    WordSet set = ds.level_word_set(n);
    if (set.min_length() > depth)
      throw error("verify_covering: level " + std::to_string(n) +
                  " has minimum word length beyond the depth");
    CoveringLevel lvl;
    lvl.level = n;
    lvl.set_size = set.size();
    lvl.set_min_length = set.min_length();
    lvl.set_max_length = set.max_length();
    lvl.len_cap = len_cap ? len_cap : std::min(3 * set.max_length(), depth);

    InterpContext ctx(set);
    BSetResult b = build_b_set(set, lvl.len_cap, force_exact, &ctx);
    lvl.b_size = b.words.size();
    lvl.b_bound = b.cardinality_bound;
    lvl.b_bounds_ok = b.bounds_ok;
    lvl.max_bucket_irreducible = b.max_bucket_irreducible;

    std::vector<std::string> b_data;
    for (const Word& w : b.words) b_data.push_back(w.data());

    bool can_extract = depth >= 2 * set.max_length();
    for (const Disagreement& pair : pairs) {
      ++lvl.pairs_checked;
      std::string suffix = pair.past.data().substr(pair.past.size() - set.min_length());
      if (!std::binary_search(b_data.begin(), b_data.end(), suffix)) ++lvl.covering_failures;

      if (!can_extract) continue;
      // Cross-check: covers from desubstitution feed the simple-double
      // pipeline and must land on a suffix of the past.
      int a = pair.branches[0];
      int a2 = pair.branches[1];
      auto covers_a = desubstitute(ds, 0, n, pair.past.append(a));
      auto covers_b = desubstitute(ds, 0, n, pair.past.append(a2));
      if (covers_a.empty() || covers_b.empty()) { lvl.extraction_ok = false; continue; }
      Morphism sigma = ds.compose_range(0, n);
      auto to_cover = [&](const Desubstitution& d) {
        Cover c;
        c.offset = d.offset;
        for (int letter : d.letters) c.blocks.push_back(sigma.image(letter));
        return c;
      };
      try {
        auto [e, simple] =
            simple_di_from_disagreement(pair.past, a, a2, set, to_cover(covers_a.front()),
                                        to_cover(covers_b.front()));
        ++lvl.extractions;
        if (!is_simple(simple, set) || !is_suffix(e, pair.past)) lvl.extraction_ok = false;
      } catch (const error&) {
        lvl.extraction_ok = false;
      }
    }

    if (!lvl.b_bounds_ok || lvl.covering_failures > 0 || !lvl.extraction_ok) pass = false;
    report.levels.push_back(std::move(lvl));
  }
  report.pass = pass;
  return report;
}

}  // namespace sadic
