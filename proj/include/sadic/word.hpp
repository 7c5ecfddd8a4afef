#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sadic {

/// Error type for all precondition violations and malformed inputs.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ordered finite set of distinct symbols. Letters are handled internally
/// as indices into the declared order; the symbol spelling only matters at
/// parse/print boundaries. Cheap to copy (shared immutable state).
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols);

  /// Alphabet {a, b, c, ...} with n single-char symbols, n <= 26.
  static Alphabet latin(int n);

  int size() const;
  const std::string& symbol(int letter) const;
  std::optional<int> find(std::string_view symbol) const;

  /// Content equality (same symbols in the same order).
  bool same_as(const Alphabet& other) const;
  bool single_char_symbols() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// A finite (possibly empty) sequence of letters over one alphabet.
/// Immutable value; letter indices are stored as bytes.
class Word {
 public:
  Word(Alphabet alphabet, std::string letters);

  static Word empty(const Alphabet& a);
  static Word of_letter(const Alphabet& a, int letter);
  /// Parses display text. Single-char alphabets accept dense text ("abab");
  /// otherwise symbols are whitespace-separated.
  static Word parse(const Alphabet& a, std::string_view text);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int at(std::size_t i) const;
  const std::string& data() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const;
  Word suffix(std::size_t len) const;
  Word append(int letter) const;

  std::string str() const;

  friend Word operator+(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v);

 private:
  Alphabet alphabet_;
  std::string letters_;
};

/// Total order: by length, then lexicographically by letter index.
bool shortlex_less(const Word& u, const Word& v);

struct ShortLex {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

bool is_prefix(const Word& u, const Word& v);
bool is_suffix(const Word& u, const Word& v);
bool is_strict_prefix(const Word& u, const Word& v);
bool is_strict_suffix(const Word& u, const Word& v);
bool prefix_dependent(const Word& u, const Word& v);
bool suffix_dependent(const Word& u, const Word& v);

/// u^{-1}w: the t with w = u t. Requires u to be a prefix of w.
Word left_quotient(const Word& u, const Word& w);
/// wv^{-1}: the t with w = t v. Requires v to be a suffix of w.
Word right_quotient(const Word& w, const Word& v);

/// All k in [1, |w|] such that w[i] = w[i+k] wherever both sides exist.
std::vector<std::size_t> periods(const Word& w);
std::size_t least_period(const Word& w);

/// Requires p, p' to be periods of w with p + p' <= |w|; returns gcd(p, p')
/// after asserting it is itself a period.
std::size_t fine_wilf(const Word& w, std::size_t p, std::size_t q);

/// A finite set of nonempty words over one alphabet, kept deduplicated in
/// shortlex order.
class WordSet {
 public:
  WordSet(Alphabet alphabet, std::vector<Word> words);
  static WordSet parse(const Alphabet& a, const std::vector<std::string>& texts);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const Word& w) const;

  std::size_t min_length() const;  ///< ⟨W⟩; requires nonempty set
  std::size_t max_length() const;  ///< |W|; requires nonempty set

  std::vector<Word> all_with_suffix(const Word& s) const;
  std::vector<Word> all_with_prefix(const Word& p) const;
  /// Canonical witness: shortest set word with the given suffix (ties: shortlex).
  std::optional<Word> shortest_with_suffix(const Word& s) const;
  std::optional<Word> shortest_with_prefix(const Word& p) const;
  /// Shortest length among set words with the given prefix, if any.
  std::optional<std::size_t> min_length_with_prefix(const Word& p) const;

 private:
  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// All ways to write w as a concatenation of set words. The empty word has
/// exactly the empty factorization; an unfactorizable word yields no entries.
std::vector<std::vector<Word>> star_factorizations(const Word& w, const WordSet& set);

}  // namespace sadic
