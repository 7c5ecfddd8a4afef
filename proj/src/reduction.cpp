#include "sadic/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace sadic {

std::string Profile::key() const {
  std::string k;
  for (const Word* w : {&first_mid_last, &first_tail_cover, &second_head_cover,
                        &second_mid_first, &second_tail_cover}) {
    k += w->data();
    k += '\xFF';
  }
  k += std::to_string(second_block_cap);
  return k;
}

std::string Profile::str() const {
  std::string s = "(";
  s += first_mid_last.str() + "," + first_tail_cover.str() + "," + second_head_cover.str() +
       "," + second_mid_first.str() + "," + second_tail_cover.str() + "," +
       std::to_string(second_block_cap) + ")";
  return s;
}

bool operator==(const Profile& a, const Profile& b) { return a.key() == b.key(); }

namespace {

std::vector<Word> minimal_length_only(std::vector<Word> words) {
  if (words.empty()) return words;
  std::size_t best = words.front().size();
  for (const Word& w : words) best = std::min(best, w.size());
  std::vector<Word> out;
  for (Word& w : words)
    if (w.size() == best) out.push_back(std::move(w));
  return out;
}

}  // namespace

std::vector<Profile> classify(const DoubleInterpretation& di, const WordSet& set) {
  if (!is_simple(di, set)) throw error("classify requires a simple double interpretation");

  std::vector<Word> mid_last =
      di.first.blocks.empty() ? set.all_with_suffix(di.first.head)
                              : std::vector<Word>{di.first.blocks.back()};
  std::vector<Word> tail_cover =
      minimal_length_only(set.all_with_prefix(di.first.tail.append(di.first.next)));
  std::vector<Word> head_cover2 = minimal_length_only(set.all_with_suffix(di.second.head));
  std::vector<Word> tail_cover2 = set.all_with_prefix(di.second.tail.append(di.second.next));

  std::vector<Word> mid_first2;
  std::size_t block_cap = 0;
  if (di.second.blocks.empty()) {
    mid_first2 = set.words();
  } else {
    mid_first2 = {di.second.blocks.front()};
    for (const Word& b : di.second.blocks) block_cap = std::max(block_cap, b.size());
  }

  std::vector<Profile> out;
  for (const Word& a : mid_last)
    for (const Word& b : tail_cover)
      for (const Word& c : head_cover2)
        for (const Word& d : mid_first2)
          for (const Word& e : tail_cover2)
            out.push_back(Profile{a, b, c, d, e, block_cap});
  std::sort(out.begin(), out.end(),
            [](const Profile& x, const Profile& y) { return x.key() < y.key(); });
  return out;
}

Word overhang(const DoubleInterpretation& di, const WordSet& set) {
  if (!is_simple(di, set)) throw error("overhang requires a simple double interpretation");
  Word via_tail = right_quotient(di.first.tail, di.second.middle_tail());
  Word via_head = left_quotient(di.first.head + di.first.middle(), di.second.head);
  if (!(via_tail == via_head))
    throw error("overhang: the two defining quotients disagree (internal inconsistency)");
  return via_tail;
}

bool equivalent(const DoubleInterpretation& a, const DoubleInterpretation& b,
                const WordSet& set) {
  std::size_t m = set.min_length();
  return a.word().suffix(m) == b.word().suffix(m);
}

bool reduces_to(const DoubleInterpretation& from, const DoubleInterpretation& to) {
  return is_strict_suffix(to.word(), from.word());
}

std::optional<DoubleInterpretation> find_reduction(const DoubleInterpretation& di,
                                                   InterpContext& ctx) {
  Word d = di.word();
  std::size_t floor = ctx.set().min_length();
  for (std::size_t len = floor; len < d.size(); ++len) {
    auto doubles = ctx.simple_doubles(d.suffix(len));
    if (!doubles.empty()) return doubles.front();
  }
  return std::nullopt;
}

IrreducibilityCheck is_irreducible(const std::vector<DoubleInterpretation>& members,
                                   InterpContext& ctx) {
  // Set semantics: identical elements collapse.
  std::vector<std::size_t> distinct;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (seen.insert(members[i].key()).second) distinct.push_back(i);

  for (std::size_t x = 0; x < distinct.size(); ++x)
    for (std::size_t y = x + 1; y < distinct.size(); ++y)
      if (equivalent(members[distinct[x]], members[distinct[y]], ctx.set()))
        return {false, "equivalent pair at indices " + std::to_string(distinct[x]) + "," +
                           std::to_string(distinct[y])};
  for (std::size_t i : distinct)
    if (ctx.suffix_reduces(members[i].word()))
      return {false, "member at index " + std::to_string(i) + " reduces (word " +
                         members[i].word().str() + ")"};
  return {true, ""};
}

const char* redux_condition_name(ReduxCondition c) {
  switch (c) {
    case ReduxCondition::prefix_dependent: return "prefix-dep";
    case ReduxCondition::equal_tail: return "equal-dR";
    case ReduxCondition::overhang_sandwich: return "tilde-sandwich";
  }
  return "?";
}

std::optional<ReduxCondition> redux_witness(const DoubleInterpretation& a,
                                            const DoubleInterpretation& b,
                                            const WordSet& set) {
  if (a == b) throw error("redux_witness requires distinct elements");
  auto pa = classify(a, set);
  auto pb = classify(b, set);
  bool shared = false;
  for (const Profile& x : pa) {
    for (const Profile& y : pb)
      if (x == y) { shared = true; break; }
    if (shared) break;
  }
  if (!shared) throw error("redux_witness requires a common profile");

  Word wa = a.second.middle_tail().append(a.first.next);
  Word wb = b.second.middle_tail().append(b.first.next);
  if (prefix_dependent(wa, wb)) return ReduxCondition::prefix_dependent;
  if (a.first.tail.size() == b.first.tail.size()) return ReduxCondition::equal_tail;
  std::size_t da = overhang(a, set).size();
  std::size_t db = overhang(b, set).size();
  if (da <= db && db <= da + a.second.middle().size()) return ReduxCondition::overhang_sandwich;
  if (db <= da && da <= db + b.second.middle().size()) return ReduxCondition::overhang_sandwich;
  return std::nullopt;
}

std::vector<DoubleInterpretation> reduction_chain(const DoubleInterpretation& di,
                                                  InterpContext& ctx) {
  if (!is_simple(di, ctx.set())) throw error("reduction_chain requires a simple input");
  std::vector<DoubleInterpretation> chain{di};
  while (true) {
    auto next = find_reduction(chain.back(), ctx);
    if (!next) break;
    chain.push_back(std::move(*next));
  }
  return chain;
}

namespace {

// Exact maximum independent set by branch and bound. The conflict relation
// here (shared trailing letters) partitions vertices into cliques, so the
// plain size bound prunes well.
void mis_search(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& order,
                std::size_t pos, std::vector<char>& alive, std::vector<std::size_t>& cur,
                std::vector<std::size_t>& best) {
  std::size_t remaining = 0;
  for (std::size_t i = pos; i < order.size(); ++i)
    if (alive[order[i]]) ++remaining;
  if (cur.size() + remaining <= best.size()) return;
  if (pos == order.size()) {
    best = cur;
    return;
  }
  std::size_t v = order[pos];
  if (!alive[v]) {
    mis_search(adj, order, pos + 1, alive, cur, best);
    return;
  }
  // Include v.
  std::vector<std::size_t> killed;
  for (std::size_t u = 0; u < adj.size(); ++u)
    if (alive[u] && u != v && adj[v][u]) { alive[u] = 0; killed.push_back(u); }
  alive[v] = 0;
  cur.push_back(v);
  mis_search(adj, order, pos + 1, alive, cur, best);
  cur.pop_back();
  for (std::size_t u : killed) alive[u] = 1;
  // Exclude v.
  mis_search(adj, order, pos + 1, alive, cur, best);
  alive[v] = 1;
}

}  // namespace

IrreducibleSubset max_irreducible_subset(const std::vector<DoubleInterpretation>& bucket,
                                         InterpContext& ctx, bool force_exact,
                                         std::size_t exact_threshold) {
  // Members with a reduction can never join an irreducible set; drop them
  // first. Duplicates collapse to their first occurrence.
  std::vector<std::size_t> eligible;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < bucket.size(); ++i) {
    if (!seen.insert(bucket[i].key()).second) continue;
    if (!ctx.suffix_reduces(bucket[i].word())) eligible.push_back(i);
  }

  IrreducibleSubset out;
  out.exact = force_exact || eligible.size() <= exact_threshold;
  if (eligible.empty()) return out;

  if (!out.exact) {
    // Greedy insertion in canonical order.
    for (std::size_t i : eligible) {
      bool clash = false;
      for (std::size_t j : out.chosen)
        if (equivalent(bucket[i], bucket[j], ctx.set())) { clash = true; break; }
      if (!clash) out.chosen.push_back(i);
    }
    return out;
  }

  std::size_t n = eligible.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (equivalent(bucket[eligible[x]], bucket[eligible[y]], ctx.set()))
        adj[x][y] = adj[y][x] = 1;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> cur, best;
  mis_search(adj, order, 0, alive, cur, best);
  std::sort(best.begin(), best.end());
  for (std::size_t i : best) out.chosen.push_back(eligible[i]);
  return out;
}

std::vector<Word> interpretable_words(const WordSet& set, std::size_t len_cap) {
  if (set.size() == 0) return {};
  const Alphabet& alpha = set.alphabet();

  std::set<std::string> heads;  // nonempty suffixes of set words
  std::set<std::string> tails;  // strict prefixes (empty included)
  tails.insert("");
  for (const Word& w : set.words()) {
    for (std::size_t l = 1; l <= w.size(); ++l) heads.insert(w.suffix(l).data());
    for (std::size_t l = 1; l < w.size(); ++l) tails.insert(w.prefix(l).data());
  }

  // Middles: everything in the star of the set, by breadth-first extension.
  std::set<std::string> middles;
  std::vector<std::string> frontier{""};
  middles.insert("");
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& m : frontier)
      for (const Word& b : set.words()) {
        if (m.size() + b.size() + 1 > len_cap) continue;  // head takes >= 1
        std::string ext = m + b.data();
        if (middles.insert(ext).second) next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }

  std::set<std::string> words;
  for (const std::string& h : heads)
    for (const std::string& m : middles) {
      if (h.size() + m.size() > len_cap) continue;
      for (const std::string& t : tails) {
        if (h.size() + m.size() + t.size() > len_cap) continue;
        words.insert(h + m + t);
      }
    }

  std::vector<Word> out;
  out.reserve(words.size());
  for (const std::string& s : words) out.emplace_back(alpha, s);
  std::sort(out.begin(), out.end(), ShortLex{});
  return out;
}

BSetResult build_b_set(const WordSet& set, std::size_t len_cap, bool force_exact,
                       InterpContext* shared_ctx) {
  if (set.size() == 0) throw error("build_b_set requires a nonempty word set");
  if (len_cap < set.min_length()) throw error("build_b_set cap below the minimum set length");

  InterpContext local(set);
  InterpContext& ctx = shared_ctx ? *shared_ctx : local;

  BSetResult result;
  unsigned long long n = set.size();
  result.cardinality_bound = 122ULL * n * n * n * n * n * n * n;

  std::map<std::string, std::pair<Profile, std::vector<DoubleInterpretation>>> buckets;
  for (const Word& w : interpretable_words(set, len_cap)) {
    ++result.interpretable_word_count;
    for (DoubleInterpretation& di : ctx.simple_doubles(w)) {
      ++result.simple_double_count;
      for (Profile& p : classify(di, set)) {
        auto it = buckets.find(p.key());
        if (it == buckets.end())
          it = buckets
                   .emplace(p.key(), std::make_pair(p, std::vector<DoubleInterpretation>{}))
                   .first;
        it->second.second.push_back(di);
      }
    }
  }

  std::set<std::string> suffixes;
  std::size_t per_bucket_bound = 61 * set.size();
  bool ok = true;
  for (auto& [key, entry] : buckets) {
    auto& [profile, members] = entry;
    IrreducibleSubset subset = max_irreducible_subset(members, ctx, force_exact);
    std::set<std::string> distinct;
    for (const auto& m : members)
      if (!ctx.suffix_reduces(m.word())) distinct.insert(m.key());
    BucketReport report{profile,
                        members.size(),
                        distinct.size(),
                        subset.chosen.size(),
                        subset.exact,
                        per_bucket_bound};
    if (report.irreducible_size > per_bucket_bound) ok = false;
    result.max_bucket_irreducible =
        std::max(result.max_bucket_irreducible, report.irreducible_size);
    for (std::size_t i : subset.chosen)
      suffixes.insert(members[i].word().suffix(set.min_length()).data());
    result.buckets.push_back(std::move(report));
  }

  for (const std::string& s : suffixes) result.words.emplace_back(set.alphabet(), s);
  std::sort(result.words.begin(), result.words.end(), ShortLex{});
  if (result.words.size() > result.cardinality_bound) ok = false;
  result.bounds_ok = ok;
  return result;
}

}  // namespace sadic
