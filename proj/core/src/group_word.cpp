#include "birev/group_word.hpp"

#include <charconv>
#include <sstream>

#include "birev/automaton.hpp"
#include "birev/error.hpp"

namespace birev {

namespace {

void pushReduced(std::vector<Factor>& out, Factor f) {
  if (!out.empty() && out.back().state == f.state && out.back().sign == -f.sign) {
    out.pop_back();
  } else {
    out.push_back(f);
  }
}

}  // namespace

GroupWord::GroupWord(std::vector<Factor> factors) {
  factors_.reserve(factors.size());
  for (Factor f : factors) {
    if (f.sign != 1 && f.sign != -1) throw Error(ErrorKind::ParseError, "factor sign must be +-1");
    pushReduced(factors_, f);
  }
}

GroupWord GroupWord::inverse() const {
  GroupWord g;
  g.factors_.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    g.factors_.push_back(Factor{it->state, -it->sign});
  }
  return g;
}

GroupWord GroupWord::power(std::int64_t n) const {
  const GroupWord base = n < 0 ? inverse() : *this;
  const std::uint64_t count = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  std::vector<Factor> all;
  all.reserve(base.factors_.size() * count);
  for (std::uint64_t k = 0; k < count; ++k) {
    all.insert(all.end(), base.factors_.begin(), base.factors_.end());
  }
  return GroupWord(std::move(all));
}

GroupWord operator*(const GroupWord& g, const GroupWord& h) {
  GroupWord out;
  out.factors_ = g.factors_;
  for (Factor f : h.factors_) pushReduced(out.factors_, f);
  return out;
}

std::string GroupWord::toString(const std::vector<std::string>& names) const {
  if (factors_.empty()) return "id";
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) s += ' ';
    const Factor f = factors_[j];
    s += f.state < names.size() ? names[f.state] : "q" + std::to_string(f.state + 1);
    if (f.sign < 0) s += "^-1";
  }
  return s;
}

GroupWord parseGroupWord(const Automaton& a, std::string_view text) {
  std::vector<Factor> factors;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "id" || token == "1") continue;
    std::string_view name = token;
    std::int64_t exponent = 1;
    if (auto caret = name.find('^'); caret != std::string_view::npos) {
      const std::string_view exp = name.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
      if (ec != std::errc() || ptr != exp.data() + exp.size())
        throw Error(ErrorKind::ParseError, "bad exponent in '" + token + "'");
      name = name.substr(0, caret);
    }
    const auto q = a.findState(name);
    if (!q) throw Error(ErrorKind::ParseError, "unknown generator '" + std::string(name) + "'");
    const int sign = exponent < 0 ? -1 : 1;
    for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
      factors.push_back(Factor{*q, sign});
    }
  }
  return GroupWord(std::move(factors));
}

}  // namespace birev
