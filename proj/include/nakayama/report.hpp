#pragma once

#include <string>
#include <vector>

namespace nakayama {

struct CheckItem {
  std::string label;
  std::string kind;  // "ueq", "trop", "divisor", "map", "polytope", ...
  bool pass = true;
  std::string witness;  // failure detail, empty on success
};

struct Report {
  std::string path;
  std::vector<CheckItem> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(std::string label, std::string kind, bool pass,
           std::string witness = "") {
    checks.push_back(
        {std::move(label), std::move(kind), pass, std::move(witness)});
  }

  void merge(const Report& o) {
    for (const auto& c : o.checks) checks.push_back(c);
  }

  std::vector<CheckItem> failures() const {
    std::vector<CheckItem> out;
    for (const auto& c : checks)
      if (!c.pass) out.push_back(c);
    return out;
  }
};

}  // namespace nakayama
