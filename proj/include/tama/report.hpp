#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tama {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

/// Outcome of one check. Fields serialize in declaration order.
struct CheckRecord {
  std::string name;
  Json parameters = Json::object();
  Status status = Status::pass;
  Json witness = Json::object();
  double runtime_ms = 0;
};

struct Report {
  std::string suite;
  Json parameters = Json::object();
  std::vector<CheckRecord> checks;
  double runtime_ms = 0;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::fail) == 0; }
};

/// `{"schema": 1, "suite": ..., "parameters": ..., "summary": ..., "checks": [...], "runtime_ms": ...}`
Json to_json(const Report& r);
/// One line per check plus a summary line.
std::string to_text(const Report& r);
/// Copy of `j` with every "runtime_ms" value replaced by 0.
Json without_runtimes(const Json& j);

struct SuiteOptions {
  int n = 4;
  int degree = 2;
  int max_degree = 4;
  unsigned long seed = 1;
  std::size_t cap = 2'000'000;
  /// 0 selects the hardware concurrency, capped by TAMA_WORKERS.
  unsigned workers = 0;
};

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs a named suite; checks run on a worker pool and are merged by key.
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& name, const SuiteOptions& options);

/// Pending check: key fields plus the work producing status and witness.
struct CheckTask {
  std::string name;
  Json parameters = Json::object();
  std::function<std::pair<Status, Json>()> run;
};

/// Worker count from `requested`, hardware concurrency and TAMA_WORKERS.
unsigned worker_count(unsigned requested);

/// Executes tasks concurrently; results sorted by (name, parameters).
std::vector<CheckRecord> run_tasks(std::vector<CheckTask> tasks, unsigned workers);

}  // namespace tama
