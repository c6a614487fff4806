#include "lfcs/population.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lfcs {
namespace {

bool same_condition(const Condition& a, const Condition& b) { return a == b; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

bool operator==(const Condition& lhs, const Condition& rhs) {
  if (lhs.sets.size() != rhs.sets.size()) return false;
  if (lhs.indicator.size() != rhs.indicator.size()) return false;
  for (std::size_t i = 0; i < lhs.sets.size(); ++i) {
    if (lhs.sets[i].index() != rhs.sets[i].index()) return false;
    if (lhs.sets[i].index() == 0) {
      if (!(std::get<CenterSpread>(lhs.sets[i]) == std::get<CenterSpread>(rhs.sets[i])))
        return false;
    } else {
      if (!(std::get<Trapezoid>(lhs.sets[i]) == std::get<Trapezoid>(rhs.sets[i])))
        return false;
    }
  }
  return std::equal(lhs.indicator.begin(), lhs.indicator.end(), rhs.indicator.begin());
}

std::int64_t Population::micro_count() const {
  std::int64_t total = 0;
  for (const auto& r : rules_) total += r->numerosity;
  return total;
}

Rule& Population::insert(std::unique_ptr<Rule> rule) {
  for (auto& existing : rules_) {
    if (existing->predicted_class == rule->predicted_class &&
        same_condition(existing->condition, rule->condition)) {
      existing->numerosity += rule->numerosity;
      return *existing;
    }
  }
  rules_.push_back(std::move(rule));
  return *rules_.back();
}

void Population::remove(const Rule* rule) {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [rule](const std::unique_ptr<Rule>& r) { return r.get() == rule; });
  if (it == rules_.end()) throw std::logic_error("Population::remove: rule not in population");
  rules_.erase(it);
}

void Population::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << dims_ << ' ' << classes_ << ' ' << to_string(representation_) << '\n';
  for (const auto& r : rules_) {
    const bool trapezoid = !r->condition.sets.empty() &&
                           std::holds_alternative<Trapezoid>(r->condition.sets[0]);
    out << (trapezoid ? "tz" : "cs");
    for (const auto& set : r->condition.sets) {
      if (const auto* cs = std::get_if<CenterSpread>(&set)) {
        out << ' ' << format_double(cs->center) << ' ' << format_double(cs->spread);
      } else {
        const auto& tz = std::get<Trapezoid>(set);
        out << ' ' << format_double(tz.a) << ' ' << format_double(tz.b) << ' '
            << format_double(tz.c) << ' ' << format_double(tz.d);
      }
    }
    for (std::uint8_t bit : r->condition.indicator) out << ' ' << static_cast<int>(bit);
    out << ' ' << r->predicted_class << ' ' << format_double(r->fitness) << ' '
        << format_double(r->experience) << ' ' << r->numerosity;
    for (double v : r->class_weights) out << ' ' << format_double(v);
    out << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Population Population::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open ruleset file '" + path + "'");
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("ruleset file '" + path + "' is empty");
  std::istringstream hs(header);
  int dims = 0;
  int classes = 0;
  std::string rep_name;
  if (!(hs >> dims >> classes >> rep_name) || dims <= 0 || classes <= 0) {
    throw std::runtime_error("ruleset file '" + path + "': malformed header '" + header + "'");
  }
  Population pop(dims, classes, representation_from_string(rep_name));
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    auto fail = [&](const std::string& what) {
      throw std::runtime_error("ruleset file '" + path + "' line " + std::to_string(lineno) +
                               ": " + what);
    };
    std::string tag;
    if (!(ls >> tag)) fail("missing representation tag");
    auto rule = std::make_unique<Rule>();
    if (tag == "cs") {
      for (int i = 0; i < dims; ++i) {
        CenterSpread cs;
        if (!(ls >> cs.center >> cs.spread)) fail("truncated center-spread condition");
        rule->condition.sets.emplace_back(cs);
      }
      rule->condition.indicator.resize(dims);
      for (int i = 0; i < dims; ++i) {
        int bit = 0;
        if (!(ls >> bit) || (bit != 0 && bit != 1)) fail("bad indicator bit");
        rule->condition.indicator[i] = static_cast<std::uint8_t>(bit);
      }
    } else if (tag == "tz") {
      for (int i = 0; i < dims; ++i) {
        Trapezoid tz;
        if (!(ls >> tz.a >> tz.b >> tz.c >> tz.d)) fail("truncated trapezoid condition");
        rule->condition.sets.emplace_back(tz);
      }
    } else {
      fail("unknown representation tag '" + tag + "'");
    }
    if (!(ls >> rule->predicted_class >> rule->fitness >> rule->experience >> rule->numerosity))
      fail("truncated rule statistics");
    rule->class_weights.resize(classes);
    for (int j = 0; j < classes; ++j) {
      if (!(ls >> rule->class_weights[j])) fail("truncated weight vector");
    }
    std::string extra;
    if (ls >> extra) fail("trailing tokens");
    rule->correct_matchings.resize(classes);
    for (int j = 0; j < classes; ++j) {
      rule->correct_matchings[j] = rule->class_weights[j] * rule->experience;
    }
    rule->weight = *std::max_element(rule->class_weights.begin(), rule->class_weights.end());
    rule->ga_timestamp = 0;
    rule->crossed = false;
    pop.rules_.push_back(std::move(rule));
  }
  return pop;
}

}  // namespace lfcs
