#include "sadic/fixture.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sadic {

namespace {

[[noreturn]] void fail(std::string_view name, std::size_t line, const std::string& msg) {
  throw error(std::string(name) + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

// Parses "{ a -> a b ; b -> a }" into per-letter image texts.
Morphism parse_rules(const Alphabet& alpha, const std::string& body, std::string_view name,
                     std::size_t line) {
  std::vector<std::string> images(static_cast<std::size_t>(alpha.size()));
  std::vector<char> defined(static_cast<std::size_t>(alpha.size()), 0);
  std::istringstream in(body);
  std::string rule;
  while (std::getline(in, rule, ';')) {
    auto toks = tokens_of(rule);
    if (toks.empty()) continue;
    if (toks.size() < 2 || toks[1] != "->") fail(name, line, "rule must look like: a -> x y");
    auto lhs = alpha.find(toks[0]);
    if (!lhs) fail(name, line, "rule for unknown letter '" + toks[0] + "'");
    if (defined[static_cast<std::size_t>(*lhs)])
      fail(name, line, "duplicate rule for letter '" + toks[0] + "'");
    if (toks.size() == 2) fail(name, line, "empty image for letter '" + toks[0] + "'");
    std::string image;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (!alpha.find(toks[i])) fail(name, line, "unknown letter '" + toks[i] + "' in image");
      if (!image.empty()) image += ' ';
      image += toks[i];
    }
    images[static_cast<std::size_t>(*lhs)] = image;
    defined[static_cast<std::size_t>(*lhs)] = 1;
  }
  for (int a = 0; a < alpha.size(); ++a)
    if (!defined[static_cast<std::size_t>(a)])
      fail(name, line, "missing rule for letter '" + alpha.symbol(a) + "'");
  return Morphism::parse(alpha, alpha, images);
}

}  // namespace

DirectiveSequence FixtureSpec::to_sequence() const {
  auto lookup = [&](const std::string& n) -> const Morphism& {
    auto it = morphisms.find(n);
    if (it == morphisms.end()) throw error("schedule references undefined morphism '" + n + "'");
    return it->second;
  };
  std::vector<Morphism> head, cycle;
  for (const auto& n : head_names) head.push_back(lookup(n));
  for (const auto& n : cycle_names) cycle.push_back(lookup(n));
  return DirectiveSequence(std::move(head), std::move(cycle), horizon);
}

FixtureSpec parse_fixture(std::string_view text, std::string_view name) {
  std::optional<Alphabet> alphabet;
  std::map<std::string, Morphism> morphisms;
  std::vector<std::string> head_names, cycle_names;
  bool have_schedule = false;
  int horizon = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = tokens_of(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];

    if (kw == "alphabet") {
      if (alphabet) fail(name, lineno, "duplicate alphabet statement");
      if (toks.size() < 2) fail(name, lineno, "alphabet needs at least one symbol");
      alphabet.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else if (kw == "morphism") {
      if (!alphabet) fail(name, lineno, "morphism before alphabet");
      auto open = raw.find('{');
      auto close = raw.rfind('}');
      if (toks.size() < 2 || open == std::string::npos || close == std::string::npos ||
          close < open)
        fail(name, lineno, "morphism must look like: morphism NAME { a -> x ; ... }");
      const std::string& mname = toks[1];
      if (morphisms.count(mname)) fail(name, lineno, "duplicate morphism '" + mname + "'");
      morphisms.emplace(mname, parse_rules(*alphabet, raw.substr(open + 1, close - open - 1),
                                           name, lineno));
    } else if (kw == "schedule") {
      if (have_schedule) fail(name, lineno, "duplicate schedule statement");
      have_schedule = true;
      std::string rest;
      for (std::size_t i = 1; i < toks.size(); ++i) rest += toks[i] + " ";
      auto rep = rest.find("repeat(");
      std::string head_part = rest.substr(0, rep == std::string::npos ? rest.size() : rep);
      for (const auto& t : tokens_of(head_part)) head_names.push_back(t);
      if (rep != std::string::npos) {
        auto close = rest.find(')', rep);
        if (close == std::string::npos) fail(name, lineno, "repeat(...) not closed");
        std::string inner = rest.substr(rep + 7, close - rep - 7);
        for (char& c : inner)
          if (c == ',') c = ' ';
        for (const auto& t : tokens_of(inner)) cycle_names.push_back(t);
        if (cycle_names.empty()) fail(name, lineno, "repeat(...) needs at least one morphism");
        auto trailing = tokens_of(rest.substr(close + 1));
        if (!trailing.empty()) fail(name, lineno, "unexpected tokens after repeat(...)");
      }
      if (head_names.empty() && cycle_names.empty())
        fail(name, lineno, "schedule needs at least one morphism");
    } else if (kw == "horizon") {
      if (toks.size() != 2) fail(name, lineno, "horizon needs exactly one integer");
      try {
        horizon = std::stoi(toks[1]);
      } catch (const std::exception&) {
        fail(name, lineno, "horizon must be an integer");
      }
      if (horizon < 1) fail(name, lineno, "horizon must be positive");
    } else {
      fail(name, lineno, "unknown statement '" + kw + "'");
    }
  }

  if (!alphabet) fail(name, lineno, "missing alphabet statement");
  if (!have_schedule) fail(name, lineno, "missing schedule statement");
  if (horizon == 0) fail(name, lineno, "missing horizon statement");

  FixtureSpec spec{std::string(name), *alphabet,          std::move(morphisms),
                   std::move(head_names), std::move(cycle_names), horizon};
  for (const auto& n : spec.head_names)
    if (!spec.morphisms.count(n))
      throw error(std::string(name) + ": schedule references undefined morphism '" + n + "'");
  for (const auto& n : spec.cycle_names)
    if (!spec.morphisms.count(n))
      throw error(std::string(name) + ": schedule references undefined morphism '" + n + "'");
  spec.to_sequence();  // validate chaining now, with a clear error
  return spec;
}

FixtureSpec load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open fixture file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_fixture(buffer.str(), path);
}

std::string fixture_hash(std::string_view text) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

}  // namespace sadic
