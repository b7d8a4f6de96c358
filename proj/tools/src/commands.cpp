#include "birev_cli/commands.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "birev/classify.hpp"
#include "birev/constructions.hpp"
#include "birev/error.hpp"
#include "birev/group.hpp"
#include "birev/level_group.hpp"
#include "birev/steering.hpp"
#include "birev_cli/config.hpp"

namespace birev::cli {

namespace {

struct Options {
  std::string config;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::size_t depth = 20;
  std::string state;
  std::string wordExpr;
  std::string input;
  std::size_t maxLevel = 6;
  std::uint64_t orderCap = 1'000'000;
  std::size_t maxLen = 6;
  std::string target;
  std::size_t level = 0;
};

struct Outcome {
  Json result;
  int code = kExitOk;
};

int exitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::MemoryBudget:
    case ErrorKind::VerificationFailed:
      return kExitNegative;
    default:
      return kExitUsage;
  }
}

Json describe(const Automaton& a) {
  Json j;
  j["family"] = a.family();
  j["states"] = a.stateCount();
  j["stateNames"] = a.stateNames();
  j["schedule"] = toJson(a.schedule());
  if (const auto p = a.periodicity()) {
    j["periodicity"] = Json{{"prefix", p->prefix}, {"period", p->period}};
  } else {
    j["periodicity"] = nullptr;
  }
  return j;
}

std::string scopeName(VerdictScope s) {
  return s == VerdictScope::ExactAllLevels ? "exact" : "checked-up-to-level";
}

Json verdictJson(const BiReversibilityVerdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["scope"] = scopeName(v.scope);
  if (v.scope == VerdictScope::CheckedUpToLevel) j["checkedUpTo"] = v.checkedUpTo;
  if (!v.holds) {
    j["failLevel"] = v.failLevel;
    j["reason"] = std::string(toString(v.reason));
  }
  return j;
}

Outcome cmdCheck(const Automaton& a, const Options& o) {
  Outcome res;
  Json levels = Json::array();
  bool invertible = true, reversible = true;
  for (Level i = 1; i <= o.depth; ++i) {
    const LevelTable& t = a.levelTable(i);
    Json l;
    l["level"] = i;
    l["size"] = t.letterCount();
    l["invertible"] = t.isInvertible();
    l["reversible"] = t.isReversible();
    if (t.isInvertible()) {
      l["inverseReversible"] = t.inverse().isReversible();
    } else {
      l["inverseReversible"] = nullptr;
    }
    l["diagonal"] = t.isDiagonal();
    invertible = invertible && t.isInvertible();
    reversible = reversible && t.isReversible();
    levels.push_back(std::move(l));
  }
  const BiReversibilityVerdict v = isBiReversible(a, o.depth);
  res.result["levels"] = std::move(levels);
  res.result["invertibleUpToDepth"] = invertible;
  res.result["reversibleUpToDepth"] = reversible;
  res.result["mealy"] = isMealy(a);
  res.result["biReversible"] = verdictJson(v);
  res.code = v.holds ? kExitOk : kExitNegative;
  return res;
}

Outcome cmdAct(const Automaton& a, const Options& o) {
  if (o.state.empty() == o.wordExpr.empty())
    throw Error(ErrorKind::ParseError, "act needs exactly one of --state or --word-expr");
  GroupWord g;
  if (!o.state.empty()) {
    const auto q = a.findState(o.state);
    if (!q) throw Error(ErrorKind::ParseError, "unknown state \"" + o.state + "\"");
    g = GroupWord::generator(*q);
  } else {
    g = parseGroupWord(a, o.wordExpr);
  }
  const Word w = parseLetters(o.input);
  Outcome res;
  res.result["element"] = g.toString(a.stateNames());
  res.result["input"] = formatLetters(w);
  res.result["output"] = formatLetters(applyWord(a, g, w));
  return res;
}

Outcome cmdLevels(const Automaton& a, const Options& o) {
  Outcome res;
  LevelGroupBudget budget;
  budget.orderCap = o.orderCap;
  res.result["orders"] = Json::array();
  for (std::size_t k = 1; k <= o.maxLevel; ++k) {
    try {
      const std::uint64_t order = levelGroupOrder(a, k, budget);
      res.result["orders"].push_back(Json{{"level", k}, {"leaves", a.schedule().leafCount(k)}, {"order", order}});
    } catch (const Error& e) {
      if (exitCodeFor(e.kind()) != kExitNegative) throw;
      res.result["stoppedAt"] = Json{{"level", k}, {"kind", std::string(toString(e.kind()))}, {"message", e.what()}};
      res.code = kExitNegative;
      break;
    }
  }
  return res;
}

Outcome cmdClassify(const Automaton& a, const Options& o) {
  SearchBudget budget;
  budget.maxDepth = o.depth;
  const GroupType t = classifyTwoStateBinary(a, budget);
  Outcome res;
  res.result["type"] = std::string(toString(t));
  res.result["order"] = orderOf(t);
  res.result["exponent"] = exponentOf(t);
  return res;
}

Outcome cmdRelations(const Automaton& a, const Options& o) {
  SearchBudget budget;
  budget.maxDepth = o.depth;
  const auto rels = relationSearch(a, o.maxLen, budget);
  Outcome res;
  Json list = Json::array();
  std::size_t equal = 0, unknown = 0;
  for (const Relation& r : rels) {
    list.push_back(Json{{"word", r.word.toString(a.stateNames())}, {"status", std::string(toString(r.status))}});
    (r.status == EqualityStatus::Equal ? equal : unknown) += 1;
  }
  res.result["method"] = a.periodicity() ? "PeriodicBFS" : "DepthBounded";
  res.result["wordsTested"] = reducedWords(a.stateCount(), o.maxLen).size();
  res.result["equal"] = equal;
  res.result["unknown"] = unknown;
  res.result["relations"] = std::move(list);
  res.result["summary"] = rels.empty() ? "none found" : std::to_string(rels.size()) + " found";
  return res;
}

Outcome cmdSteer(const Automaton& a, const Options& o) {
  const Word v = parseLetters(o.target);
  const SteeringResult r = steerToWord(a, v);
  Outcome res;
  res.result["element"] = r.element.toString(a.stateNames());
  res.result["form"] = "c^" + std::to_string(r.n1) + " b^-1 c^" + std::to_string(r.n0) + " b, c = a b^-1";
  res.result["n0"] = r.n0;
  res.result["n1"] = r.n1;
  res.result["base"] = formatLetters(r.base);
  res.result["target"] = formatLetters(r.target);
  const Word image = applyWord(a, r.element, r.base);
  res.result["image"] = formatLetters(image);
  res.result["verified"] = image == v;
  return res;
}

Outcome cmdOrbit(const Automaton& a, const Options& o) {
  const Word seed(o.level, 0);
  const std::size_t orbit = orbitAtLevel(a, o.level, seed);
  const std::size_t leaves = a.schedule().leafCount(o.level);
  Outcome res;
  res.result["level"] = o.level;
  res.result["seed"] = formatLetters(seed);
  res.result["orbitSize"] = orbit;
  res.result["leafCount"] = leaves;
  res.result["transitive"] = orbit == leaves;
  res.code = orbit == leaves ? kExitOk : kExitNegative;
  return res;
}

Json listBuiltins() {
  Json list = Json::array();
  for (const BuiltinInfo& b : builtinCatalog())
    list.push_back(Json{{"family", b.family}, {"summary", b.summary}, {"example", b.example}});
  return list;
}

void renderText(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& e : v)
      if (e.is_structured()) return false;
    return true;
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      renderText(value, out, indent + 2);
    } else if (value.is_array() && !flat(value)) {
      out << pad << key << ":\n";
      for (const Json& e : value) {
        if (e.is_object()) {
          bool first = true;
          for (const auto& [k, v] : e.items()) {
            out << pad << (first ? "  - " : "    ") << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << '\n';
            first = false;
          }
        } else {
          out << pad << "  - " << e.dump() << '\n';
        }
      }
    } else if (value.is_array()) {
      out << pad << key << ": [";
      for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
      out << "]\n";
    } else {
      out << pad << key << ": " << scalar(value) << '\n';
    }
  }
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report.dump(2) << '\n';
  } else {
    renderText(report, out, 0);
  }
}

void addShared(CLI::App* sub, Options& o, bool needsConfig) {
  auto* c = sub->add_option("--config", o.config, "config document (JSON)");
  if (needsConfig) c->required();
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", o.seed, "seed for random_bir22");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Automata over changing alphabets: checks, actions, level groups, classification, steering"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "invertibility, reversibility, bi-reversibility, diagonality");
  addShared(check, o, true);
  check->add_option("--depth", o.depth, "levels to inspect")->check(CLI::PositiveNumber);

  auto* act = app.add_subcommand("act", "apply a state or generator word to a word");
  addShared(act, o, true);
  act->add_option("--state", o.state, "state name (a, b, ... or q1, q2, ...)");
  act->add_option("--word-expr", o.wordExpr, "generator word, leftmost applied last");
  act->add_option("--input", o.input, "comma-separated letters")->required();

  auto* levels = app.add_subcommand("levels", "orders of the level groups G(A|^k)");
  addShared(levels, o, true);
  levels->add_option("--max-level", o.maxLevel, "deepest level");
  levels->add_option("--order-cap", o.orderCap, "order cap")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "group of a 2-state bi-reversible binary automaton");
  addShared(classify, o, true);
  classify->add_option("--depth", o.depth, "search depth");

  auto* relations = app.add_subcommand("relations", "reduced words that act trivially");
  addShared(relations, o, true);
  relations->add_option("--max-len", o.maxLen, "longest word");
  relations->add_option("--depth", o.depth, "depth for unbounded schedules")->check(CLI::PositiveNumber);

  auto* steer = app.add_subcommand("steer", "element mapping the base word to a target");
  addShared(steer, o, true);
  steer->add_option("--target", o.target, "comma-separated letters")->required();

  auto* orbit = app.add_subcommand("orbit", "orbit of the all-zero word at a level");
  addShared(orbit, o, true);
  orbit->add_option("--level", o.level, "level k")->required();

  auto* list = app.add_subcommand("list-builtins", "builtin families with example configs");
  addShared(list, o, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json report;
  report["command"] = nullptr;  // filled last; keeps the key first
  Json echo{{"name", name}};
  if (!o.config.empty()) echo["config"] = o.config;
  if (o.seed) echo["seed"] = *o.seed;

  if (sub == list) {
    report["command"] = echo;
    report["builtins"] = listBuiltins();
    emit(report, o, out);
    return kExitOk;
  }

  try {
    const ConfigDocument doc = loadConfig(o.config);
    const Automaton a = buildAutomaton(doc, o.seed);
    report["automaton"] = describe(a);
    Outcome res;
    if (sub == check) {
      echo["depth"] = o.depth;
      res = cmdCheck(a, o);
    } else if (sub == act) {
      if (!o.state.empty()) echo["state"] = o.state;
      if (!o.wordExpr.empty()) echo["wordExpr"] = o.wordExpr;
      echo["input"] = o.input;
      res = cmdAct(a, o);
    } else if (sub == levels) {
      echo["maxLevel"] = o.maxLevel;
      echo["orderCap"] = o.orderCap;
      res = cmdLevels(a, o);
    } else if (sub == classify) {
      echo["depth"] = o.depth;
      res = cmdClassify(a, o);
    } else if (sub == relations) {
      echo["maxLen"] = o.maxLen;
      echo["depth"] = o.depth;
      res = cmdRelations(a, o);
    } else if (sub == steer) {
      echo["target"] = o.target;
      res = cmdSteer(a, o);
    } else {
      echo["level"] = o.level;
      res = cmdOrbit(a, o);
    }
    report["command"] = echo;
    report["result"] = std::move(res.result);
    emit(report, o, out);
    return res.code;
  } catch (const Error& e) {
    report["command"] = echo;
    report["error"] = Json{{"kind", std::string(toString(e.kind()))}, {"message", e.what()}};
    if (o.format == "json") emit(report, o, out);
    err << "error: " << toString(e.kind()) << ": " << e.what() << '\n';
    return exitCodeFor(e.kind());
  }
}

}  // namespace birev::cli
