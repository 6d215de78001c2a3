#include "rcat/report.hpp"

#include <algorithm>

namespace rcat {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Truncated: return "truncated";
  }
  return "?";
}

bool LawReport::fail(const CheckOptions& o, std::string tag, std::vector<std::string> witness,
                     std::string detail) {
  if (status != Status::Truncated) status = Status::Fail;
  violations.push_back({std::move(tag), std::move(witness), std::move(detail)});
  return !o.all_violations;
}

void LawReport::merge(const LawReport& other) {
  if (other.status == Status::Fail) status = Status::Fail;
  if (other.status == Status::Truncated && status == Status::Pass) status = Status::Truncated;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  checked += other.checked;
  sampled = sampled || other.sampled;
  if (!other.note.empty()) note += (note.empty() ? "" : "; ") + other.note;
}

bool LawReport::has_tag(const std::string& tag) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.tag == tag; });
}

LawReport truncated(std::string why) {
  LawReport r;
  r.status = Status::Truncated;
  r.note = std::move(why);
  return r;
}

}  // namespace rcat
