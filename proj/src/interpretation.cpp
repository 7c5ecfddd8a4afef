#include "sadic/interpretation.hpp"

#include <algorithm>
#include <cassert>

namespace sadic {

Word Interpretation::word() const { return head + middle_tail(); }

Word Interpretation::middle() const {
  Word m = Word::empty(head.alphabet());
  for (const Word& b : blocks) m = m + b;
  return m;
}

Word Interpretation::middle_tail() const { return middle() + tail; }

std::string Interpretation::key() const {
  // 0xFF never appears as a letter (alphabets hold at most 255 symbols).
  std::string k = head.data();
  for (const Word& b : blocks) {
    k += '\xFF';
    k += b.data();
  }
  k += '\xFE';
  k += tail.data();
  k += '\xFF';
  k += static_cast<char>(next);
  return k;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  return a.next == b.next && a.head == b.head && a.tail == b.tail && a.blocks == b.blocks;
}

Interpretation make_interpretation(const WordSet& set, Word head, std::vector<Word> blocks,
                                   Word tail, int next) {
  if (head.empty()) throw error("interpretation head must be nonempty");
  auto head_witness = set.shortest_with_suffix(head);
  if (!head_witness) throw error("interpretation head is not a suffix of any set word");
  for (const Word& b : blocks)
    if (!set.contains(b)) throw error("interpretation block is not a set word");
  auto tail_witness = set.shortest_with_prefix(tail.append(next));
  if (!tail_witness)
    throw error("interpretation tail·next is not a prefix of any set word");
  Interpretation out{std::move(head), std::move(blocks), std::move(tail), next,
                     std::move(*head_witness), std::move(*tail_witness)};
  return out;
}

std::vector<Interpretation> enumerate_interpretations(const Word& d, const WordSet& set) {
  if (d.empty()) throw error("cannot interpret the empty word");
  if (!d.alphabet().same_as(set.alphabet()))
    throw error("enumerate_interpretations: alphabet mismatch");
  std::vector<Interpretation> out;
  const Alphabet& alpha = d.alphabet();
  std::size_t max_head = set.size() ? std::min(d.size(), set.max_length()) : 0;
  for (std::size_t head_len = 1; head_len <= max_head; ++head_len) {
    Word head = d.prefix(head_len);
    if (!set.shortest_with_suffix(head)) continue;
    for (std::size_t tail_len = 0; tail_len <= d.size() - head_len; ++tail_len) {
      Word tail = d.suffix(tail_len);
      std::vector<int> nexts;
      for (int c = 0; c < alpha.size(); ++c)
        if (set.shortest_with_prefix(tail.append(c))) nexts.push_back(c);
      if (nexts.empty()) continue;
      Word middle = d.subword(head_len, d.size() - head_len - tail_len);
      for (auto& blocks : star_factorizations(middle, set))
        for (int c : nexts)
          out.push_back(make_interpretation(set, head, blocks, tail, c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Interpretation& a, const Interpretation& b) { return a.key() < b.key(); });
  return out;
}

Interpretation inherit(const Interpretation& interp, const Word& shorter, const WordSet& set) {
  Word d = interp.word();
  if (!is_prefix(shorter, d)) throw error("inherit: word must be a prefix of the interpreted word");
  if (shorter.size() < interp.head.size())
    throw error("inherit: prefix shorter than the interpretation head");

  std::size_t rest = shorter.size() - interp.head.size();
  std::vector<Word> blocks;
  std::size_t used = 0;
  for (const Word& b : interp.blocks) {
    if (used + b.size() > rest) break;
    blocks.push_back(b);
    used += b.size();
  }
  std::size_t cut = rest - used;  // falls inside the next block, the tail, or at its end
  Word tail = Word::empty(d.alphabet());
  int next;
  if (blocks.size() < interp.blocks.size()) {
    const Word& within = interp.blocks[blocks.size()];
    tail = within.prefix(cut);
    next = within.at(cut);
  } else if (cut < interp.tail.size()) {
    tail = interp.tail.prefix(cut);
    next = interp.tail.at(cut);
  } else {
    tail = interp.tail;
    next = interp.next;
  }
  return make_interpretation(set, interp.head, std::move(blocks), std::move(tail), next);
}

std::string DoubleInterpretation::key() const {
  std::string k = word().data();
  k += '\xFD';
  k += first.key();
  k += '\xFD';
  k += second.key();
  return k;
}

bool operator==(const DoubleInterpretation& a, const DoubleInterpretation& b) {
  return a.first == b.first && a.second == b.second;
}

DoubleInterpretation make_double(Interpretation first, Interpretation second) {
  if (!(first.word() == second.word()))
    throw error("double interpretation requires both decompositions to share the word");
  if (first.next == second.next)
    throw error("double interpretation requires distinct expected letters");
  return DoubleInterpretation{std::move(first), std::move(second)};
}

DoubleInterpretation swapped(const DoubleInterpretation& di) {
  return DoubleInterpretation{di.second, di.first};
}

bool is_simple(const DoubleInterpretation& di, const WordSet& set) {
  if (!is_suffix(di.second.middle_tail(), di.first.tail)) return false;
  bool second_head_in_set = set.contains(di.second.head);
  if (!second_head_in_set) {
    // first.tail_witness is the shortest set word extending first.tail·next.
    if (di.second.head.size() < di.first.tail_witness.size()) return false;
  }
  // Both the second head and the word are now at least ⟨set⟩ long.
  assert(di.second.head.size() >= set.min_length());
  assert(di.word().size() >= set.min_length());
  return true;
}

std::vector<DoubleInterpretation> enumerate_simple_doubles(const Word& d, const WordSet& set) {
  std::vector<Interpretation> interps = enumerate_interpretations(d, set);
  std::vector<DoubleInterpretation> out;
  for (const Interpretation& a : interps)
    for (const Interpretation& b : interps) {
      if (a.next == b.next) continue;
      DoubleInterpretation di{a, b};
      if (is_simple(di, set)) out.push_back(std::move(di));
    }
  return out;  // already canonical: interps are sorted and the pair loop is stable
}

namespace {

// Splits off the leading block of a nonempty block list.
std::pair<Word, std::vector<Word>> split_first(const std::vector<Word>& blocks) {
  assert(!blocks.empty());
  return {blocks.front(), std::vector<Word>(blocks.begin() + 1, blocks.end())};
}

}  // namespace

std::pair<Word, DoubleInterpretation> extract_simple(const DoubleInterpretation& input,
                                                     const WordSet& set,
                                                     std::vector<DescentStep>* trace) {
  DoubleInterpretation di = input;
  if (!set.contains(di.second.head))
    throw error("extract_simple: second head must be a set word");
  if (di.first.head.size() > di.second.head.size() + di.second.middle().size())
    throw error("extract_simple: first head longer than second head·middle");

  for (std::size_t guard = input.word().size() + 1; guard > 0; --guard) {
    const Interpretation& I = di.first;
    const Interpretation& J = di.second;
    Word d = di.word();

    if (is_strict_prefix(J.head, I.head)) {
      // The second head ends strictly inside the first head: drop it. The
      // remainder of the first head is nonempty and stays a witness suffix;
      // the second decomposition loses its leading block.
      if (trace) trace->push_back({1, d});
      auto [u, v] = split_first(J.blocks);
      Interpretation new_first =
          make_interpretation(set, left_quotient(J.head, I.head), I.blocks, I.tail, I.next);
      Interpretation new_second = make_interpretation(set, u, v, J.tail, J.next);
      di = make_double(std::move(new_first), std::move(new_second));
      continue;
    }
    if (is_strict_prefix(I.head, J.head)) {
      if (is_simple(di, set)) return {d, di};
      // Not simple means the first tail ends strictly inside the second's
      // blocks·tail, so the first decomposition has blocks to shed; the pair
      // order flips to keep a set-word head in second position.
      if (trace) trace->push_back({2, d});
      auto [u, v] = split_first(I.blocks);
      Interpretation new_first =
          make_interpretation(set, left_quotient(I.head, J.head), J.blocks, J.tail, J.next);
      Interpretation new_second = make_interpretation(set, u, v, I.tail, I.next);
      di = make_double(std::move(new_first), std::move(new_second));
      continue;
    }
    // Equal heads.
    if (I.blocks.empty()) {
      assert(is_simple(di, set));
      return {d, di};
    }
    if (J.blocks.empty()) {
      DoubleInterpretation flipped = swapped(di);
      assert(is_simple(flipped, set));
      return {d, flipped};
    }
    if (trace) trace->push_back({3, d});
    auto [u, v] = split_first(I.blocks);
    auto [u2, v2] = split_first(J.blocks);
    Interpretation ji = make_interpretation(set, u, v, I.tail, I.next);
    Interpretation jj = make_interpretation(set, u2, v2, J.tail, J.next);
    if (u2.size() <= u.size())
      di = make_double(std::move(jj), std::move(ji));
    else
      di = make_double(std::move(ji), std::move(jj));
  }
  throw error("extract_simple: descent did not terminate (internal inconsistency)");
}

namespace {

// Cuts the interpretation of the window [start, start+len) out of a cover
// whose blocks concatenate to a string holding the aligned text.
Interpretation interpretation_from_cover(const Cover& cover, const WordSet& set,
                                         std::size_t start, std::size_t len) {
  // Block boundary positions within the concatenation.
  std::vector<std::size_t> bounds{0};
  for (const Word& b : cover.blocks) bounds.push_back(bounds.back() + b.size());
  std::size_t end = start + len;  // position of the expected letter
  if (end >= bounds.back()) throw error("cover too short for the requested window");

  auto block_of = [&](std::size_t pos) {
    std::size_t i = 0;
    while (bounds[i + 1] <= pos) ++i;
    return i;
  };
  std::size_t bi = block_of(start);
  std::size_t be = block_of(end);
  if (bi == be) throw error("cover window shorter than a single block");

  const Word& first_block = cover.blocks[bi];
  Word head = first_block.suffix(bounds[bi + 1] - start);
  std::vector<Word> blocks(cover.blocks.begin() + static_cast<std::ptrdiff_t>(bi) + 1,
                           cover.blocks.begin() + static_cast<std::ptrdiff_t>(be));
  const Word& last_block = cover.blocks[be];
  Word tail = last_block.prefix(end - bounds[be]);
  int next = last_block.at(end - bounds[be]);
  return make_interpretation(set, std::move(head), std::move(blocks), std::move(tail), next);
}

void check_cover(const Cover& cover, const Word& past, int letter, const WordSet& set) {
  std::string text;
  for (const Word& b : cover.blocks) {
    if (!set.contains(b)) throw error("cover block is not a set word");
    text += b.data();
  }
  if (cover.blocks.empty() || cover.offset >= cover.blocks.front().size())
    throw error("cover offset must fall inside the first block");
  std::string window = past.data();
  window.push_back(static_cast<char>(letter));
  if (cover.offset + window.size() > text.size() ||
      text.compare(cover.offset, window.size(), window) != 0)
    throw error("cover does not reproduce past·letter at its offset");
}

}  // namespace

std::pair<Word, DoubleInterpretation> simple_di_from_disagreement(
    const Word& past, int a, int a_prime, const WordSet& set, const Cover& first_cover,
    const Cover& second_cover) {
  if (a == a_prime) throw error("disagreement requires distinct continuation letters");
  std::size_t wide = set.max_length();
  if (past.size() < 2 * wide)
    throw error("disagreement past shorter than twice the longest set word");
  check_cover(first_cover, past, a, set);
  check_cover(second_cover, past, a_prime, set);

  // Block starts of the second cover, as distances back from coordinate 0.
  std::vector<std::size_t> starts{0};
  for (const Word& b : second_cover.blocks) starts.push_back(starts.back() + b.size());
  starts.pop_back();

  for (std::size_t l = 2 * wide; l <= past.size(); ++l) {
    std::size_t window_start = second_cover.offset + past.size() - l;
    if (!std::binary_search(starts.begin(), starts.end(), window_start)) continue;
    std::size_t first_start = first_cover.offset + past.size() - l;
    Interpretation fi = interpretation_from_cover(first_cover, set, first_start, l);
    Interpretation si = interpretation_from_cover(second_cover, set, window_start, l);
    if (fi.next != a || si.next != a_prime)
      throw error("cover alignment does not reproduce the disagreement letters");
    return extract_simple(make_double(std::move(fi), std::move(si)), set);
  }
  throw error("no window length in [2·max, |past|] aligns the second cover on a block start");
}

InterpContext::InterpContext(WordSet set) : set_(std::move(set)) {}

const std::vector<Interpretation>& InterpContext::interpretations(const Word& w) {
  auto it = interp_memo_.find(w.data());
  if (it != interp_memo_.end()) return it->second;
  auto computed = enumerate_interpretations(w, set_);
  return interp_memo_.emplace(w.data(), std::move(computed)).first->second;
}

std::vector<DoubleInterpretation> InterpContext::simple_doubles(const Word& w) {
  const auto& interps = interpretations(w);
  std::vector<DoubleInterpretation> out;
  for (const Interpretation& a : interps)
    for (const Interpretation& b : interps) {
      if (a.next == b.next) continue;
      DoubleInterpretation di{a, b};
      if (is_simple(di, set_)) out.push_back(std::move(di));
    }
  return out;
}

bool InterpContext::word_has_simple_double(const Word& w) {
  auto it = has_simple_memo_.find(w.data());
  if (it != has_simple_memo_.end()) return it->second;
  bool found = false;
  const auto& interps = interpretations(w);
  for (const Interpretation& a : interps) {
    for (const Interpretation& b : interps) {
      if (a.next == b.next) continue;
      if (is_simple(DoubleInterpretation{a, b}, set_)) { found = true; break; }
    }
    if (found) break;
  }
  has_simple_memo_.emplace(w.data(), found);
  return found;
}

bool InterpContext::suffix_reduces(const Word& w) {
  if (w.size() <= set_.min_length()) return false;  // no strict suffix can carry one
  auto it = suffix_memo_.find(w.data());
  if (it != suffix_memo_.end()) return it->second;
  Word tail = w.suffix(w.size() - 1);
  bool result = word_has_simple_double(tail) || suffix_reduces(tail);
  suffix_memo_.emplace(w.data(), result);
  return result;
}

}  // namespace sadic
