#pragma once

#include <set>
#include <string>
#include <vector>

#include "config.hpp"

namespace circq::app {

enum class Relation { AtMost, GreaterThan, Report };
enum class Status { Pass, Fail, Skip, Report };

struct CheckRecord {
  std::string name;
  double value = 0.0;  // max error, count or measured quantity
  Relation rel = Relation::AtMost;
  double threshold = 0.0;
  Status status = Status::Pass;
  std::string note;
};

const char* status_name(Status s);
const char* relation_name(Relation r);

// Runs every invariant suite. Names in `corrupt` (or "all") get a threshold that
// cannot be met, to exercise the failure path.
std::vector<CheckRecord> run_verify(const RunConfig& cfg, const std::set<std::string>& corrupt = {});

bool all_passed(const std::vector<CheckRecord>& recs);

}  // namespace circq::app
