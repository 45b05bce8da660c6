#pragma once

// Pass/fail records for verification batteries.

#include <deque>
#include <string>

namespace cstkit {

struct Check {
  std::string relation;
  bool pass = true;
  std::size_t instances = 0;  // identities checked
  std::string witness;        // first failure, empty on pass
  std::string note;           // pinned values worth printing, e.g. a constant
};

struct Report {
  std::string suite;
  std::deque<Check> checks;  // stable references across add()
  std::string skipped;       // reason the battery did not run, empty otherwise

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t passed() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.pass ? 1 : 0;
    return k;
  }
  const Check* find(const std::string& relation) const {
    for (const auto& c : checks)
      if (c.relation == relation) return &c;
    return nullptr;
  }
  Check& add(std::string relation) {
    checks.push_back({std::move(relation), true, 0, {}, {}});
    return checks.back();
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) {
      checks.push_back(c);
      checks.back().relation = other.suite + ": " + c.relation;
    }
  }
};

// Records one instance; keeps the first failing witness.
inline void record(Check& c, bool ok, const std::string& witness) {
  ++c.instances;
  if (!ok && c.pass) {
    c.pass = false;
    c.witness = witness;
  }
}

}  // namespace cstkit
