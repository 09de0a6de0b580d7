#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace persrep {

struct CheckEntry {
  std::string name;
  bool pass = true;
  std::string detail;
  nlohmann::json degree;  // null unless the check is tied to a degree
};

// Ordered list of named pass/fail checks. Every validator and verifier
// returns one of these instead of throwing.
class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    entries_.push_back({std::move(name), pass, std::move(detail), nullptr});
  }
  void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
  void fail(std::string name, std::string detail) { add(std::move(name), false, std::move(detail)); }

  bool pass() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.pass ? 0 : 1;
    return n;
  }
  const std::vector<CheckEntry>& entries() const { return entries_; }

  // First failing entry's detail, or empty.
  std::string first_failure() const {
    for (const auto& e : entries_)
      if (!e.pass) return e.name + ": " + e.detail;
    return {};
  }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& e : entries_) {
      nlohmann::json c;
      if (!e.degree.is_null()) c["degree"] = e.degree;
      c["name"] = e.name;
      c["pass"] = e.pass;
      c["detail"] = e.detail;
      checks.push_back(std::move(c));
    }
    return {{"checks", std::move(checks)}, {"pass", pass()}};
  }

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace persrep
