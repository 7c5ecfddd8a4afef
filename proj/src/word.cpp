#include "sadic/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sadic {

struct Alphabet::Impl {
  std::vector<std::string> symbols;
  std::map<std::string, int, std::less<>> index;
  bool single_char = true;
};

Alphabet::Alphabet(std::vector<std::string> symbols) {
  if (symbols.empty()) throw error("alphabet must have at least one symbol");
  if (symbols.size() > 255) throw error("alphabet too large (max 255 symbols)");
  auto impl = std::make_shared<Impl>();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string& s = symbols[i];
    if (s.empty()) throw error("alphabet symbol must not be empty");
    if (impl->index.count(s)) throw error("duplicate alphabet symbol: " + s);
    impl->index.emplace(s, static_cast<int>(i));
    if (s.size() != 1) impl->single_char = false;
  }
  impl->symbols = std::move(symbols);
  impl_ = std::move(impl);
}

Alphabet Alphabet::latin(int n) {
  if (n < 1 || n > 26) throw error("latin alphabet size out of range");
  std::vector<std::string> symbols;
  for (int i = 0; i < n; ++i) symbols.push_back(std::string(1, static_cast<char>('a' + i)));
  return Alphabet(std::move(symbols));
}

int Alphabet::size() const { return static_cast<int>(impl_->symbols.size()); }

const std::string& Alphabet::symbol(int letter) const {
  if (letter < 0 || letter >= size()) throw error("letter index out of range");
  return impl_->symbols[static_cast<std::size_t>(letter)];
}

std::optional<int> Alphabet::find(std::string_view symbol) const {
  auto it = impl_->index.find(symbol);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::same_as(const Alphabet& other) const {
  return impl_ == other.impl_ || impl_->symbols == other.impl_->symbols;
}

bool Alphabet::single_char_symbols() const { return impl_->single_char; }

namespace {

void require_same_alphabet(const Word& u, const Word& v, const char* what) {
  if (!u.alphabet().same_as(v.alphabet()))
    throw error(std::string("alphabet mismatch in ") + what);
}

}  // namespace

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (unsigned char c : letters_)
    if (c >= static_cast<unsigned>(alphabet_.size()))
      throw error("word letter outside its alphabet");
}

Word Word::empty(const Alphabet& a) { return Word(a, std::string()); }

Word Word::of_letter(const Alphabet& a, int letter) {
  if (letter < 0 || letter >= a.size()) throw error("letter index out of range");
  return Word(a, std::string(1, static_cast<char>(letter)));
}

Word Word::parse(const Alphabet& a, std::string_view text) {
  std::string letters;
  if (a.single_char_symbols() && text.find(' ') == std::string_view::npos) {
    for (char c : text) {
      auto idx = a.find(std::string_view(&c, 1));
      if (!idx) throw error(std::string("unknown letter '") + c + "' in word");
      letters.push_back(static_cast<char>(*idx));
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      auto idx = a.find(tok);
      if (!idx) throw error("unknown letter '" + tok + "' in word");
      letters.push_back(static_cast<char>(*idx));
    }
  }
  return Word(a, std::move(letters));
}

int Word::at(std::size_t i) const {
  if (i >= letters_.size()) throw error("word position out of range");
  return static_cast<unsigned char>(letters_[i]);
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size() || len > letters_.size() - pos)
    throw error("subword range out of bounds");
  return Word(alphabet_, letters_.substr(pos, len));
}

Word Word::prefix(std::size_t len) const { return subword(0, len); }

Word Word::suffix(std::size_t len) const {
  if (len > letters_.size()) throw error("suffix longer than word");
  return subword(letters_.size() - len, len);
}

Word Word::append(int letter) const {
  if (letter < 0 || letter >= alphabet_.size()) throw error("letter index out of range");
  std::string data = letters_;
  data.push_back(static_cast<char>(letter));
  return Word(alphabet_, std::move(data));
}

std::string Word::str() const {
  if (alphabet_.single_char_symbols()) {
    std::string out;
    for (unsigned char c : letters_) out += alphabet_.symbol(c);
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += alphabet_.symbol(static_cast<unsigned char>(letters_[i]));
  }
  return out;
}

Word operator+(const Word& u, const Word& v) {
  require_same_alphabet(u, v, "concatenation");
  return Word(u.alphabet_, u.letters_ + v.letters_);
}

bool operator==(const Word& u, const Word& v) {
  require_same_alphabet(u, v, "comparison");
  return u.letters_ == v.letters_;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u.data() < v.data();
}

bool is_prefix(const Word& u, const Word& v) {
  require_same_alphabet(u, v, "prefix test");
  return u.size() <= v.size() && v.data().compare(0, u.size(), u.data()) == 0;
}

bool is_suffix(const Word& u, const Word& v) {
  require_same_alphabet(u, v, "suffix test");
  return u.size() <= v.size() &&
         v.data().compare(v.size() - u.size(), u.size(), u.data()) == 0;
}

bool is_strict_prefix(const Word& u, const Word& v) {
  return u.size() < v.size() && is_prefix(u, v);
}

bool is_strict_suffix(const Word& u, const Word& v) {
  return u.size() < v.size() && is_suffix(u, v);
}

bool prefix_dependent(const Word& u, const Word& v) {
  return is_prefix(u, v) || is_prefix(v, u);
}

bool suffix_dependent(const Word& u, const Word& v) {
  return is_suffix(u, v) || is_suffix(v, u);
}

Word left_quotient(const Word& u, const Word& w) {
  if (!is_prefix(u, w)) throw error("left_quotient: first argument is not a prefix");
  return w.subword(u.size(), w.size() - u.size());
}

Word right_quotient(const Word& w, const Word& v) {
  if (!is_suffix(v, w)) throw error("right_quotient: second argument is not a suffix");
  return w.subword(0, w.size() - v.size());
}

std::vector<std::size_t> periods(const Word& w) {
  if (w.empty()) throw error("periods of the empty word are undefined");
  std::vector<std::size_t> out;
  const std::string& s = w.data();
  for (std::size_t k = 1; k <= s.size(); ++k) {
    bool ok = true;
    for (std::size_t i = 0; i + k < s.size(); ++i)
      if (s[i] != s[i + k]) { ok = false; break; }
    if (ok) out.push_back(k);
  }
  return out;
}

std::size_t least_period(const Word& w) { return periods(w).front(); }

std::size_t fine_wilf(const Word& w, std::size_t p, std::size_t q) {
  auto ps = periods(w);
  auto has = [&](std::size_t k) { return std::find(ps.begin(), ps.end(), k) != ps.end(); };
  if (!has(p) || !has(q)) throw error("fine_wilf: arguments must be periods of the word");
  if (p + q > w.size()) throw error("fine_wilf: requires p + p' <= |w|");
  std::size_t g = std::gcd(p, q);
  if (!has(g)) throw error("fine_wilf: gcd is not a period (internal inconsistency)");
  return g;
}

WordSet::WordSet(Alphabet alphabet, std::vector<Word> words) : alphabet_(std::move(alphabet)) {
  for (const Word& w : words) {
    if (w.empty()) throw error("word set member must be nonempty");
    if (!w.alphabet().same_as(alphabet_)) throw error("word set member over wrong alphabet");
  }
  std::sort(words.begin(), words.end(), ShortLex{});
  words.erase(std::unique(words.begin(), words.end()), words.end());
  words_ = std::move(words);
}

WordSet WordSet::parse(const Alphabet& a, const std::vector<std::string>& texts) {
  std::vector<Word> ws;
  for (const auto& t : texts) ws.push_back(Word::parse(a, t));
  return WordSet(a, std::move(ws));
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w, ShortLex{});
}

std::size_t WordSet::min_length() const {
  if (words_.empty()) throw error("min_length of an empty word set");
  return words_.front().size();
}

std::size_t WordSet::max_length() const {
  if (words_.empty()) throw error("max_length of an empty word set");
  return words_.back().size();
}

std::vector<Word> WordSet::all_with_suffix(const Word& s) const {
  std::vector<Word> out;
  for (const Word& w : words_)
    if (is_suffix(s, w)) out.push_back(w);
  return out;
}

std::vector<Word> WordSet::all_with_prefix(const Word& p) const {
  std::vector<Word> out;
  for (const Word& w : words_)
    if (is_prefix(p, w)) out.push_back(w);
  return out;
}

std::optional<Word> WordSet::shortest_with_suffix(const Word& s) const {
  for (const Word& w : words_)
    if (is_suffix(s, w)) return w;  // shortlex order: first hit is canonical
  return std::nullopt;
}

std::optional<Word> WordSet::shortest_with_prefix(const Word& p) const {
  for (const Word& w : words_)
    if (is_prefix(p, w)) return w;
  return std::nullopt;
}

std::optional<std::size_t> WordSet::min_length_with_prefix(const Word& p) const {
  auto w = shortest_with_prefix(p);
  if (!w) return std::nullopt;
  return w->size();
}

namespace {

// Memoized per-position search over the suffixes of w.
void factorize_from(const Word& w, const WordSet& set, std::size_t pos,
                    std::vector<std::vector<std::vector<Word>>>& memo,
                    std::vector<char>& known) {
  if (known[pos]) return;
  known[pos] = 1;
  if (pos == w.size()) {
    memo[pos].push_back({});
    return;
  }
  for (const Word& block : set.words()) {
    if (block.size() > w.size() - pos) continue;
    if (w.data().compare(pos, block.size(), block.data()) != 0) continue;
    factorize_from(w, set, pos + block.size(), memo, known);
    for (const auto& rest : memo[pos + block.size()]) {
      std::vector<Word> item;
      item.reserve(rest.size() + 1);
      item.push_back(block);
      item.insert(item.end(), rest.begin(), rest.end());
      memo[pos].push_back(std::move(item));
    }
  }
}

}  // namespace

std::vector<std::vector<Word>> star_factorizations(const Word& w, const WordSet& set) {
  if (!w.alphabet().same_as(set.alphabet()))
    throw error("star_factorizations: alphabet mismatch");
  std::vector<std::vector<std::vector<Word>>> memo(w.size() + 1);
  std::vector<char> known(w.size() + 1, 0);
  factorize_from(w, set, 0, memo, known);
  return memo[0];
}

}  // namespace sadic
