#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace polycx {

enum class Status { pass, fail, skipped_out_of_assumption, no_qualifying_instances };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string name;
  std::string anchor;  // name of the result being exercised, e.g. "square lemma"
  Status status = Status::pass;
  std::size_t instances = 0;
  std::string counterexample;
};

struct Report {
  std::string suite;
  std::string instance;
  std::vector<Check> checks;

  bool passed() const;
  std::size_t count(Status s) const;
  /// Records a check that passes iff `failure` is empty.
  Check& add(std::string name, std::string anchor, std::size_t instances, std::string failure = {});
  void append(const Report& other);
};

}  // namespace polycx
