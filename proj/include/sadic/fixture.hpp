#pragma once

#include <map>
#include <string>

#include "sadic/directive.hpp"

namespace sadic {

/// A parsed fixture file: one alphabet, named endomorphisms on it, and an
/// eventually periodic schedule.
///
/// Grammar (one statement per line, `#` starts a comment):
///   alphabet <letter> <letter> ...
///   morphism <name> { <letter> -> <letter>+ ; ... }
///   schedule [<name> ...] [repeat(<name>[, <name>]...)]
///   horizon <integer>
struct FixtureSpec {
  std::string name;
  Alphabet alphabet;
  std::map<std::string, Morphism> morphisms;
  std::vector<std::string> head_names;
  std::vector<std::string> cycle_names;
  int horizon = 0;

  DirectiveSequence to_sequence() const;
};

FixtureSpec parse_fixture(std::string_view text, std::string_view name = "fixture");

/// Reads and parses the file; throws with the path on failure.
FixtureSpec load_fixture(const std::string& path);

/// FNV-1a over the raw fixture text; stable across runs for report headers.
std::string fixture_hash(std::string_view text);

}  // namespace sadic
