#include "negsssp/instrument.hpp"

#include <algorithm>
#include <map>

namespace negsssp {

std::string_view to_string(CallKind kind) {
  switch (kind) {
    case CallKind::kDijkstra: return "dijkstra";
    case CallKind::kFewNeg: return "fewneg";
    case CallKind::kLdd: return "ldd";
  }
  return "unknown";
}

void WorkSpanCounter::record_sequential(const OracleCall& call) {
  TaskLog log;
  log.record(call);
  record_stage(std::span<const TaskLog>(&log, 1));
}

void WorkSpanCounter::record_sequential(const TaskLog& log) {
  record_stage(std::span<const TaskLog>(&log, 1));
}

void WorkSpanCounter::record_stage(std::span<const TaskLog> tasks) {
  std::uint64_t longest = 0;
  bool any = false;
  std::uint64_t task_id = 0;
  for (const TaskLog& task : tasks) {
    if (task.empty()) continue;
    any = true;
    for (const OracleCall& call : task.calls()) {
      log_.push_back({call, stages_, task_id});
      work_ += call.work;
    }
    longest = std::max(longest, task.work());
    ++task_id;
  }
  if (!any) return;
  span_ += longest;
  ++stages_;
}

void WorkSpanCounter::append(const WorkSpanCounter& other) {
  for (const LoggedCall& entry : other.log_) {
    log_.push_back({entry.call, entry.stage + stages_, entry.task});
  }
  work_ += other.work_;
  span_ += other.span_;
  stages_ += other.stages_;
}

std::uint64_t WorkSpanCounter::oracle_calls() const {
  return static_cast<std::uint64_t>(std::count_if(log_.begin(), log_.end(), [](const LoggedCall& c) {
    return c.call.kind != CallKind::kLdd;
  }));
}

std::uint64_t WorkSpanCounter::recompute_span(std::span<const LoggedCall> log) {
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> per_task;
  for (const LoggedCall& entry : log) per_task[entry.stage][entry.task] += entry.call.work;
  std::uint64_t span = 0;
  for (const auto& [stage, tasks] : per_task) {
    std::uint64_t longest = 0;
    for (const auto& [task, work] : tasks) longest = std::max(longest, work);
    span += longest;
  }
  return span;
}

}  // namespace negsssp
