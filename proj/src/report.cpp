#include "polycx/report.hpp"

#include <algorithm>

#include "polycx/types.hpp"

namespace polycx {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_out_of_assumption: return "skipped-out-of-assumption";
    case Status::no_qualifying_instances: return "no-qualifying-instances";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  for (Status v : {Status::pass, Status::fail, Status::skipped_out_of_assumption, Status::no_qualifying_instances})
    if (to_string(v) == s) return v;
  throw IoError("unknown status '" + s + "'");
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

Check& Report::add(std::string name, std::string anchor, std::size_t instances, std::string failure) {
  Check c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.instances = instances;
  c.status = failure.empty() ? Status::pass : Status::fail;
  c.counterexample = std::move(failure);
  checks.push_back(std::move(c));
  return checks.back();
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

}  // namespace polycx
