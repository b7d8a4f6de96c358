#include "birev_cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "birev/constructions.hpp"
#include "birev/error.hpp"

namespace birev::cli {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw Error(ErrorKind::ParseError, context + ": " + what);
}

void checkKeys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& context) {
  if (!obj.is_object()) fail(context, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
      fail(context, "unknown key \"" + key + "\"");
  }
}

const Json& require(const Json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(context, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t asUInt(const Json& j, const std::string& context) {
  if (!j.is_number_integer()) fail(context, "expected a non-negative integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) fail(context, "expected a non-negative integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::size_t> asUIntList(const Json& j, const std::string& context) {
  if (!j.is_array()) fail(context, "expected an array of integers");
  std::vector<std::size_t> out;
  for (const Json& v : j) out.push_back(asUInt(v, context));
  return out;
}

std::uint64_t optUInt(const Json& obj, const char* key, std::uint64_t fallback, const std::string& context) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : asUInt(*it, context + "." + key);
}

LevelTable parseLevelTable(const Json& j, const std::string& context) {
  checkKeys(j, {"transition", "output"}, context);
  auto rows = [&](const char* key) {
    const Json& m = require(j, key, context);
    if (!m.is_array()) fail(context, std::string(key) + " must be an array of rows");
    std::vector<std::vector<std::uint32_t>> out;
    for (const Json& row : m) {
      std::vector<std::uint32_t> r;
      for (std::size_t v : asUIntList(row, context + "." + key)) r.push_back(static_cast<std::uint32_t>(v));
      out.push_back(std::move(r));
    }
    return out;
  };
  try {
    return LevelTable(rows("transition"), rows("output"));
  } catch (const Error& e) {
    fail(context, e.what());
  }
}

std::vector<LevelTable> parseTables(const Json& j, const std::string& context) {
  if (!j.is_array()) fail(context, "expected an array of level tables");
  std::vector<LevelTable> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parseLevelTable(j[i], context + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<Permutation>> parseLabelings(const Json& j, std::size_t states,
                                                     const std::string& context) {
  if (!j.is_array()) fail(context, "expected an array of levels");
  std::vector<std::vector<Permutation>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string here = context + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != states) fail(here, "expected one labeling per state");
    std::vector<Permutation> level;
    for (const Json& images : j[i]) {
      std::vector<Letter> img;
      for (std::size_t v : asUIntList(images, here)) img.push_back(static_cast<Letter>(v));
      if (!Permutation::isBijection(img)) fail(here, "labeling is not a permutation");
      level.emplace_back(std::move(img));
    }
    out.push_back(std::move(level));
  }
  return out;
}

/// Equal sizes on a horizon that covers both schedules' prefixes and cycles.
bool sameSizes(const AlphabetSchedule& lhs, const AlphabetSchedule& rhs) {
  if (lhs.isBounded() != rhs.isBounded()) return false;
  const std::size_t horizon = std::max(lhs.prefix().size(), rhs.prefix().size()) + 64;
  for (Level i = 1; i <= horizon; ++i) {
    if (lhs.sizeAt(i) != rhs.sizeAt(i)) return false;
  }
  return true;
}

AlphabetSchedule requireSchedule(const ConfigDocument& doc, const std::string& family) {
  if (!doc.schedule) fail("schedule", "family " + family + " needs a schedule");
  return *doc.schedule;
}

Automaton withIntrinsicSchedule(const ConfigDocument& doc, Automaton a) {
  if (doc.schedule && !sameSizes(*doc.schedule, a.schedule()))
    fail("schedule", "family " + a.family() + " has a fixed schedule that the given one does not match");
  return a;
}

IndexSet parseIndexSet(const Json& params) {
  checkKeys(params, {"list", "consecutiveFrom"}, "params");
  IndexSet set;
  if (params.contains("list")) set.list = asUIntList(params["list"], "params.list");
  if (params.contains("consecutiveFrom"))
    set.consecutiveFrom = asUInt(params["consecutiveFrom"], "params.consecutiveFrom");
  if (set.list.empty() && !set.consecutiveFrom) fail("params", "index set is empty");
  return set;
}

SubsequenceRule parseRule(const Json& j) {
  checkKeys(j, {"list", "start", "step"}, "params.xi");
  SubsequenceRule r;
  if (j.contains("list")) r.list = asUIntList(j["list"], "params.xi.list");
  r.start = optUInt(j, "start", 1, "params.xi");
  r.step = optUInt(j, "step", 1, "params.xi");
  try {
    r.validate();
  } catch (const Error& e) {
    fail("params.xi", e.what());
  }
  return r;
}

Automaton buildBuiltin(const ConfigDocument& doc, const BuiltinSpec& spec, std::optional<std::uint64_t> seed) {
  const std::string& f = spec.family;
  const Json& p = spec.params;
  if (f == "example1") {
    checkKeys(p, {}, "params");
    return exampleOneAutomaton(requireSchedule(doc, f));
  }
  if (f == "example2") {
    checkKeys(p, {"flipLetter", "fixedLetter"}, "params");
    ExampleTwoOptions o;
    o.flipLetter = static_cast<Letter>(optUInt(p, "flipLetter", 0, "params"));
    o.fixedLetter = static_cast<Letter>(optUInt(p, "fixedLetter", 1, "params"));
    return exampleTwoAutomaton(requireSchedule(doc, f), o);
  }
  if (f == "diagonal") {
    checkKeys(p, {"states", "prefix", "period"}, "params");
    const std::size_t states = asUInt(require(p, "states", "params"), "params.states");
    if (states == 0) fail("params.states", "must be positive");
    DiagonalLabelings l;
    if (p.contains("prefix")) l.prefix = parseLabelings(p["prefix"], states, "params.prefix");
    l.period = parseLabelings(require(p, "period", "params"), states, "params.period");
    return diagonalAutomaton(requireSchedule(doc, f), l);
  }
  if (f == "gi") return withIntrinsicSchedule(doc, giAutomaton(parseIndexSet(p)));
  if (f == "z2z4" || f == "z4" || f == "lamplighter" || f == "bellaterra" || f == "bellaterra_dual") {
    checkKeys(p, {}, "params");
    if (f == "z2z4") return withIntrinsicSchedule(doc, z2z4Automaton());
    if (f == "z4") return withIntrinsicSchedule(doc, z4Automaton());
    if (f == "lamplighter") return withIntrinsicSchedule(doc, lamplighterCayleyMachine());
    if (f == "bellaterra") return withIntrinsicSchedule(doc, bellaterraAutomaton());
    return withIntrinsicSchedule(doc, bellaterraDual());
  }
  if (f == "embed_subsequence") {
    checkKeys(p, {"inner", "xi"}, "params");
    const ConfigDocument inner = parseConfig(require(p, "inner", "params"));
    return embedOnSubsequence(buildAutomaton(inner, seed), parseRule(require(p, "xi", "params")),
                              requireSchedule(doc, f))
        .withFamily(f);
  }
  if (f == "random_bir22") {
    checkKeys(p, {"seed", "prefixLen", "periodLen"}, "params");
    const std::uint64_t s = seed ? *seed : optUInt(p, "seed", 0, "params");
    const std::size_t prefixLen = optUInt(p, "prefixLen", 2, "params");
    const std::size_t periodLen = optUInt(p, "periodLen", 2, "params");
    if (periodLen == 0) fail("params.periodLen", "must be positive");
    return withIntrinsicSchedule(doc, randomTwoStateBinaryBiReversible(s, prefixLen, periodLen));
  }
  fail("automaton.builtin", "unknown family \"" + f + "\"");
}

}  // namespace

AlphabetSchedule parseSchedule(const Json& j) {
  checkKeys(j, {"prefix", "tail"}, "schedule");
  std::vector<std::size_t> prefix;
  if (j.contains("prefix")) prefix = asUIntList(j["prefix"], "schedule.prefix");
  const Json& tail = require(j, "tail", "schedule");
  checkKeys(tail, {"kind", "value"}, "schedule.tail");
  const Json& kind = require(tail, "kind", "schedule.tail");
  const Json& value = require(tail, "value", "schedule.tail");
  if (!kind.is_string()) fail("schedule.tail.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "constant") return AlphabetSchedule(prefix, ConstantTail{asUInt(value, "schedule.tail.value")});
    if (k == "periodic") return AlphabetSchedule(prefix, PeriodicTail{asUIntList(value, "schedule.tail.value")});
    if (k == "ramp") {
      checkKeys(value, {"offset"}, "schedule.tail.value");
      return AlphabetSchedule(prefix, RampTail{asUInt(require(value, "offset", "schedule.tail.value"),
                                                      "schedule.tail.value.offset")});
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail("schedule", e.what());
  }
  fail("schedule.tail.kind", "expected constant, periodic or ramp");
}

ConfigDocument parseConfig(const Json& doc) {
  checkKeys(doc, {"schedule", "automaton"}, "config");
  ConfigDocument out;
  if (doc.contains("schedule")) out.schedule = parseSchedule(doc["schedule"]);
  const Json& a = require(doc, "automaton", "config");
  if (!a.is_object() || a.size() == 0) fail("automaton", "expected \"builtin\" or \"explicit\"");
  if (a.contains("builtin")) {
    checkKeys(a, {"builtin", "params"}, "automaton");
    BuiltinSpec spec;
    if (!a["builtin"].is_string()) fail("automaton.builtin", "expected a family name");
    spec.family = a["builtin"].get<std::string>();
    if (a.contains("params")) {
      if (!a["params"].is_object()) fail("automaton.params", "expected an object");
      spec.params = a["params"];
    }
    out.automaton = std::move(spec);
  } else {
    checkKeys(a, {"explicit"}, "automaton");
    const Json& e = a["explicit"];
    checkKeys(e, {"states", "prefix", "period"}, "automaton.explicit");
    ExplicitSpec spec;
    spec.states = asUInt(require(e, "states", "automaton.explicit"), "automaton.explicit.states");
    if (spec.states == 0) fail("automaton.explicit.states", "must be positive");
    if (e.contains("prefix")) spec.prefix = parseTables(e["prefix"], "automaton.explicit.prefix");
    spec.period = parseTables(require(e, "period", "automaton.explicit"), "automaton.explicit.period");
    if (spec.period.empty()) fail("automaton.explicit.period", "must be non-empty");
    for (const auto* list : {&spec.prefix, &spec.period}) {
      for (const LevelTable& t : *list) {
        if (t.stateCount() != spec.states) fail("automaton.explicit", "table state count differs from states");
      }
    }
    if (!out.schedule) fail("config", "explicit automata need a schedule");
    out.automaton = std::move(spec);
  }
  return out;
}

ConfigDocument parseConfigText(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  return parseConfig(j);
}

ConfigDocument loadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parseConfigText(ss.str());
}

Json toJson(const AlphabetSchedule& s) {
  Json j;
  j["prefix"] = s.prefix();
  Json tail;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ConstantTail>) {
          tail["kind"] = "constant";
          tail["value"] = t.size;
        } else if constexpr (std::is_same_v<T, PeriodicTail>) {
          tail["kind"] = "periodic";
          tail["value"] = t.sizes;
        } else {
          tail["kind"] = "ramp";
          tail["value"] = Json{{"offset", t.offset}};
        }
      },
      s.tail());
  j["tail"] = std::move(tail);
  return j;
}

Json toJson(const LevelTable& t) {
  Json j;
  j["transition"] = t.transitionRows();
  j["output"] = t.outputRows();
  return j;
}

Json toJson(const ConfigDocument& doc) {
  Json j;
  if (doc.schedule) j["schedule"] = toJson(*doc.schedule);
  if (const auto* b = std::get_if<BuiltinSpec>(&doc.automaton)) {
    j["automaton"] = Json{{"builtin", b->family}, {"params", b->params}};
  } else {
    const auto& e = std::get<ExplicitSpec>(doc.automaton);
    Json ex;
    ex["states"] = e.states;
    ex["prefix"] = Json::array();
    for (const auto& t : e.prefix) ex["prefix"].push_back(toJson(t));
    ex["period"] = Json::array();
    for (const auto& t : e.period) ex["period"].push_back(toJson(t));
    j["automaton"] = Json{{"explicit", std::move(ex)}};
  }
  return j;
}

Automaton buildAutomaton(const ConfigDocument& doc, std::optional<std::uint64_t> seed) {
  if (const auto* b = std::get_if<BuiltinSpec>(&doc.automaton)) return buildBuiltin(doc, *b, seed);
  const auto& e = std::get<ExplicitSpec>(doc.automaton);
  try {
    return Automaton::explicitPeriodic(*doc.schedule, e.prefix, e.period);
  } catch (const Error& err) {
    fail("automaton.explicit", err.what());
  }
}

ConfigDocument explicitDocument(const Automaton& a) {
  const PeriodicForm form = canonicalPeriodicForm(a);
  ConfigDocument doc;
  doc.schedule = a.schedule();
  doc.automaton = ExplicitSpec{a.stateCount(), form.prefix, form.period};
  return doc;
}

const std::vector<BuiltinInfo>& builtinCatalog() {
  static const std::vector<BuiltinInfo> catalog = [] {
    auto sched = [](const AlphabetSchedule& s) { return toJson(s); };
    auto builtin = [](const char* family, Json params) {
      return Json{{"builtin", family}, {"params", std::move(params)}};
    };
    std::vector<BuiltinInfo> c;
    c.push_back({"example1", "diagonal automaton of the integer permutations a(n), b(n)",
                 Json{{"schedule", sched(AlphabetSchedule::ramp(0))}, {"automaton", builtin("example1", Json::object())}}});
    c.push_back({"example2", "transposition / long-cycle automaton; params flipLetter, fixedLetter",
                 Json{{"schedule", sched(AlphabetSchedule::ramp(1))},
                      {"automaton", builtin("example2", Json{{"flipLetter", 0}, {"fixedLetter", 1}})}}});
    c.push_back({"diagonal", "diagonal automaton from explicit labelings; params states, prefix, period",
                 Json{{"schedule", sched(AlphabetSchedule::constant(3))},
                      {"automaton", builtin("diagonal", Json{{"states", 2},
                                                             {"prefix", Json::array()},
                                                             {"period", Json::array({Json::array({{1, 2, 0}, {1, 0, 2}})})}})}}});
    c.push_back({"gi", "G_I over sizes i in I; params list, consecutiveFrom",
                 Json{{"automaton", builtin("gi", Json{{"list", {2, 3, 5}}, {"consecutiveFrom", 7}})}}});
    c.push_back({"z2z4", "2-state binary automaton with group Z2 x Z4",
                 Json{{"automaton", builtin("z2z4", Json::object())}}});
    c.push_back({"z4", "2-state binary automaton with group Z4", Json{{"automaton", builtin("z4", Json::object())}}});
    c.push_back({"lamplighter", "Cayley machine of Z2 (lamplighter group)",
                 Json{{"automaton", builtin("lamplighter", Json::object())}}});
    c.push_back({"bellaterra", "3-state binary Bellaterra automaton",
                 Json{{"automaton", builtin("bellaterra", Json::object())}}});
    c.push_back({"bellaterra_dual", "dual of the Bellaterra automaton (2 states, ternary)",
                 Json{{"automaton", builtin("bellaterra_dual", Json::object())}}});
    c.push_back(
        {"embed_subsequence", "inner automaton placed on levels xi_j of the host schedule; params inner, xi",
         Json{{"schedule", sched(AlphabetSchedule::periodic({4, 3, 4, 5}))},
              {"automaton",
               builtin("embed_subsequence",
                       Json{{"inner", Json{{"schedule", sched(AlphabetSchedule::periodic({3, 5}))},
                                           {"automaton", builtin("example2", Json::object())}}},
                            {"xi", Json{{"list", Json::array()}, {"start", 2}, {"step", 2}}}})}}});
    c.push_back({"random_bir22", "random 2-state binary bi-reversible automaton; params seed, prefixLen, periodLen",
                 Json{{"automaton", builtin("random_bir22", Json{{"seed", 1}, {"prefixLen", 2}, {"periodLen", 2}})}}});
    return c;
  }();
  return catalog;
}

Word parseLetters(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorKind::ParseError, "empty letter in \"" + text + "\"");
    const std::string digits = item.substr(b, e - b + 1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 9)
      throw Error(ErrorKind::ParseError, "bad letter \"" + digits + "\"");
    w.push_back(static_cast<Letter>(std::stoul(digits)));
  }
  if (text.back() == ',') throw Error(ErrorKind::ParseError, "trailing comma in \"" + text + "\"");
  return w;
}

std::string formatLetters(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace birev::cli
