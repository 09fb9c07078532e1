#include "tama/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace tama {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "fail";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

Json to_json(const Report& r) {
  Json out;
  out["schema"] = 1;
  out["suite"] = r.suite;
  out["parameters"] = r.parameters;
  out["summary"] = {{"total", r.checks.size()},
                    {"passed", r.count(Status::pass)},
                    {"failed", r.count(Status::fail)},
                    {"skipped", r.count(Status::skipped)}};
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["parameters"] = c.parameters;
    j["status"] = to_string(c.status);
    j["witness"] = c.witness;
    j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  out["runtime_ms"] = r.runtime_ms;
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP") << "  " << c.name;
    if (!c.parameters.empty()) out << " " << c.parameters.dump();
    if (!c.witness.empty()) out << "  " << c.witness.dump();
    out << "\n";
  }
  out << r.suite << ": " << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, "
      << r.count(Status::skipped) << " skipped\n";
  return out.str();
}

Json without_runtimes(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) out[k] = k == "runtime_ms" ? Json(0) : without_runtimes(v);
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(without_runtimes(v));
    return out;
  }
  return j;
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TAMA_WORKERS")) {
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

std::vector<CheckRecord> run_tasks(std::vector<CheckTask> tasks, unsigned workers) {
  std::vector<CheckRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      CheckRecord& rec = records[i];
      rec.name = tasks[i].name;
      rec.parameters = tasks[i].parameters;
      try {
        auto [status, witness] = tasks[i].run();
        rec.status = status;
        rec.witness = std::move(witness);
      } catch (const std::exception& e) {
        rec.status = Status::fail;
        rec.witness = {{"error", e.what()}};
      }
      rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  unsigned count = std::min<unsigned>(worker_count(workers), static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.parameters < b.parameters;
  });
  return records;
}

}  // namespace tama
