#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "birev/automaton.hpp"

namespace birev::cli {

using Json = nlohmann::ordered_json;

struct BuiltinSpec {
  std::string family;
  Json params = Json::object();
};

struct ExplicitSpec {
  std::size_t states = 1;
  std::vector<LevelTable> prefix;
  std::vector<LevelTable> period;
};

/// A parsed config document. The schedule is optional only for families
/// with an intrinsic schedule.
struct ConfigDocument {
  std::optional<AlphabetSchedule> schedule;
  std::variant<BuiltinSpec, ExplicitSpec> automaton;
};

/// Schema check plus range checks; throws Error(ParseError) on unknown keys,
/// wrong types or malformed tables.
ConfigDocument parseConfig(const Json& doc);
ConfigDocument parseConfigText(const std::string& text);
ConfigDocument loadConfig(const std::string& path);

Json toJson(const ConfigDocument& doc);
Json toJson(const AlphabetSchedule& schedule);
Json toJson(const LevelTable& table);
AlphabetSchedule parseSchedule(const Json& j);

/// Materializes the automaton; `seed` overrides random_bir22's seed.
Automaton buildAutomaton(const ConfigDocument& doc, std::optional<std::uint64_t> seed = std::nullopt);

/// Explicit form of a periodic automaton. Throws UndecidableRepresentation.
ConfigDocument explicitDocument(const Automaton& a);

struct BuiltinInfo {
  std::string family;
  std::string summary;
  Json example;  // a complete config document
};

const std::vector<BuiltinInfo>& builtinCatalog();

/// Comma-separated 0-based letters; the empty string is the empty word.
Word parseLetters(const std::string& text);
std::string formatLetters(const Word& w);

}  // namespace birev::cli
