#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rcat {

enum class Status { Pass, Fail, Truncated };

const char* to_string(Status s);

struct Violation {
  std::string tag;
  std::vector<std::string> witness;
  std::string detail;
};

struct CheckOptions {
  bool all_violations = false;
  std::size_t cap = 10000;
  // when set, quantified laws are checked on this many random instances each
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
};

struct LawReport {
  Status status = Status::Pass;
  std::vector<Violation> violations;
  std::size_t checked = 0;
  bool sampled = false;
  std::string note;

  bool passed() const { return status == Status::Pass; }

  // records a violation; returns true when the caller should stop
  bool fail(const CheckOptions& o, std::string tag, std::vector<std::string> witness,
            std::string detail = {});
  bool stop(const CheckOptions& o) const {
    return status == Status::Fail && !o.all_violations;
  }
  void merge(const LawReport& other);
  bool has_tag(const std::string& tag) const;
  const Violation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

LawReport truncated(std::string why);

}  // namespace rcat
