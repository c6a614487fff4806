#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lfcs/config.hpp"
#include "lfcs/rule.hpp"

namespace lfcs {

// The rule population. Rules live behind stable pointers so match/correct
// sets can reference them across insertions and deletions.
class Population {
 public:
  Population() = default;
  Population(int dims, int classes, Representation rep)
      : dims_(dims), classes_(classes), representation_(rep) {}

  int dims() const { return dims_; }
  int class_count() const { return classes_; }
  Representation representation() const { return representation_; }

  const std::vector<std::unique_ptr<Rule>>& rules() const { return rules_; }
  std::vector<std::unique_ptr<Rule>>& rules() { return rules_; }

  int macro_count() const { return static_cast<int>(rules_.size()); }
  std::int64_t micro_count() const;

  // Inserts a rule; if an existing rule has a bit-identical condition and the
  // same class, that rule's numerosity grows instead and the newcomer is
  // dropped. Returns the rule now carrying the numerosity.
  Rule& insert(std::unique_ptr<Rule> rule);

  // Removes one macro rule entirely (all numerosity). Throws if absent.
  void remove(const Rule* rule);

  void save(const std::string& path) const;
  static Population load(const std::string& path);

 private:
  int dims_ = 0;
  int classes_ = 0;
  Representation representation_ = Representation::adaptive;
  std::vector<std::unique_ptr<Rule>> rules_;
};

}  // namespace lfcs
