#include "sadic/directive.hpp"

#include <algorithm>

namespace sadic {

DirectiveSequence::DirectiveSequence(std::vector<Morphism> head, std::vector<Morphism> cycle,
                                     int horizon)
    : head_(std::move(head)), cycle_(std::move(cycle)), horizon_(horizon) {
  if (head_.empty() && cycle_.empty()) throw error("directive sequence must have morphisms");
  if (horizon_ < 1) throw error("directive sequence horizon must be positive");
  // Chain contiguity: domain of τ_n equals codomain of τ_{n+1}.
  auto check_link = [](const Morphism& outer, const Morphism& inner) {
    if (!outer.domain().same_as(inner.codomain()))
      throw error("directive sequence levels do not chain (domain/codomain mismatch)");
  };
  for (std::size_t i = 0; i + 1 < head_.size(); ++i) check_link(head_[i], head_[i + 1]);
  if (!head_.empty() && !cycle_.empty()) check_link(head_.back(), cycle_.front());
  for (std::size_t i = 0; i + 1 < cycle_.size(); ++i) check_link(cycle_[i], cycle_[i + 1]);
  if (!cycle_.empty()) check_link(cycle_.back(), cycle_.front());  // periodic wrap
}

DirectiveSequence DirectiveSequence::stationary(const Morphism& m, int horizon) {
  if (!m.domain().same_as(m.codomain()))
    throw error("stationary sequence needs an endomorphism");
  return DirectiveSequence({}, {m}, horizon);
}

int DirectiveSequence::max_defined_level() const {
  if (periodic()) return horizon_;
  return std::min<int>(horizon_, static_cast<int>(head_.size()));
}

const Morphism& DirectiveSequence::morphism_at(int n) const {
  if (n < 0 || n >= max_defined_level())
    throw error("level " + std::to_string(n) + " outside the defined schedule");
  if (n < static_cast<int>(head_.size())) return head_[static_cast<std::size_t>(n)];
  std::size_t k = static_cast<std::size_t>(n) - head_.size();
  return cycle_[k % cycle_.size()];
}

Alphabet DirectiveSequence::level_alphabet(int n) const {
  if (n < max_defined_level()) return morphism_at(n).codomain();
  if (n == max_defined_level()) return morphism_at(n - 1).domain();
  throw error("level alphabet beyond the defined schedule");
}

Morphism DirectiveSequence::compose_range(int n, int N, std::size_t size_cap) const {
  if (n < 0 || n >= N) throw error("compose_range requires 0 <= n < N");
  if (N > max_defined_level()) throw error("compose_range beyond schedule horizon");
  Morphism acc = morphism_at(N - 1);
  for (int k = N - 2; k >= n; --k) acc = compose(morphism_at(k), acc, size_cap);
  return acc;
}

WordSet DirectiveSequence::level_word_set(int n, std::size_t size_cap) const {
  if (n < 1) throw error("level word set requires n >= 1");
  Morphism sigma = compose_range(0, n, size_cap);
  std::vector<Word> words;
  for (int a = 0; a < sigma.domain().size(); ++a) words.push_back(sigma.image(a));
  return WordSet(sigma.codomain(), std::move(words));
}

int alphabet_rank(const DirectiveSequence& ds) {
  int best = -1;
  if (ds.periodic()) {
    int start = static_cast<int>(ds.head_size());
    for (std::size_t i = 0; i < ds.cycle_size(); ++i) {
      int sz = ds.level_alphabet(start + static_cast<int>(i)).size();
      if (best < 0 || sz < best) best = sz;
    }
  } else {
    int top = ds.max_defined_level();
    for (int n = (top >= 1 ? 1 : 0); n <= top; ++n) {
      int sz = ds.level_alphabet(n).size();
      if (best < 0 || sz < best) best = sz;
    }
  }
  return best;
}

GrowthReport is_everywhere_growing(const DirectiveSequence& ds, int horizon) {
  GrowthReport report;
  int top = std::min(horizon, ds.max_defined_level());
  report.trace.push_back(1);  // τ_[0,0) is the identity
  // The trace is diagnostic; stop extending once compositions get bulky.
  constexpr std::size_t kTraceBudget = 65536;
  Morphism acc = Morphism::identity(ds.level_alphabet(0));
  for (int N = 1; N <= top; ++N) {
    acc = compose(acc, ds.morphism_at(N - 1));
    report.trace.push_back(acc.min_image_length());
    if (acc.total_image_length() > kTraceBudget) break;
  }

  if (ds.periodic()) {
    // Exact criterion on the cycle block σ: minimum image lengths of σ^k are
    // nondecreasing, a strict rise within #A periods certifies unboundedness,
    // and no rise by then certifies a letter whose images stay single forever.
    int start = static_cast<int>(ds.head_size());
    int period = static_cast<int>(ds.cycle_size());
    Morphism sigma = ds.compose_range(start, start + period);
    int letters = sigma.domain().size();
    Morphism power = Morphism::identity(sigma.domain());
    std::size_t prev = power.min_image_length();
    report.exact = true;
    report.everywhere_growing = false;
    for (int k = 0; k < letters; ++k) {
      power = compose(sigma, power);
      std::size_t cur = power.min_image_length();
      if (cur > prev) { report.everywhere_growing = true; break; }
      prev = cur;
    }
  } else {
    report.exact = false;
    report.everywhere_growing = report.trace.back() >= 2;
  }
  return report;
}

DirectiveSequence contract(const DirectiveSequence& ds, const std::vector<int>& cuts) {
  if (cuts.size() < 2 || cuts.front() != 0) throw error("contract: cuts must start at 0 and name at least one range");
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i] >= cuts[i + 1]) throw error("contract: cuts must be strictly increasing");
  if (cuts.back() > ds.max_defined_level()) throw error("contract: cuts beyond schedule horizon");

  std::vector<Morphism> head;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    head.push_back(ds.compose_range(cuts[i], cuts[i + 1]));

  // Keep a periodic tail when the last step can repeat forever: the repeat of
  // the final cut width must land inside the cyclic part on a whole number of
  // periods. The tail block is composed straight from cycle morphisms so it
  // does not count against the declared horizon.
  std::vector<Morphism> cycle;
  if (ds.periodic()) {
    int last = cuts.back();
    int step = last - cuts[cuts.size() - 2];
    int period = static_cast<int>(ds.cycle_size());
    bool in_cycle = last >= static_cast<int>(ds.head_size());
    if (in_cycle && step % period == 0) {
      int phase = (last - static_cast<int>(ds.head_size())) % period;
      Morphism acc = Morphism::identity(
          ds.morphism_at(static_cast<int>(ds.head_size()) + (phase + step - 1) % period)
              .domain());
      for (int i = step - 1; i >= 0; --i) {
        int idx = static_cast<int>(ds.head_size()) + (phase + i) % period;
        acc = compose(ds.morphism_at(idx), acc);
      }
      cycle.push_back(std::move(acc));
    }
  }
  int horizon = cycle.empty() ? static_cast<int>(head.size()) : ds.horizon();
  return DirectiveSequence(std::move(head), std::move(cycle), std::max(horizon, 1));
}

}  // namespace sadic
