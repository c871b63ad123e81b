#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace negsssp {

enum class CallKind : std::uint8_t {
  kDijkstra,  // direct nonnegative-oracle call
  kFewNeg,    // oracle call on a layered graph
  kLdd,       // one decomposition (ball growing, SCC passes)
};

std::string_view to_string(CallKind kind);

struct OracleCall {
  CallKind kind = CallKind::kDijkstra;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t work = 0;
};

/// Calls made by one sequential task. Each concurrent task owns its log, so
/// recording needs no synchronization and the merge order is fixed.
class TaskLog {
 public:
  void record(const OracleCall& call) {
    calls_.push_back(call);
    work_ += call.work;
  }
  std::span<const OracleCall> calls() const { return calls_; }
  std::uint64_t work() const { return work_; }
  bool empty() const { return calls_.empty(); }

 private:
  std::vector<OracleCall> calls_;
  std::uint64_t work_ = 0;
};

struct LoggedCall {
  OracleCall call;
  std::uint64_t stage = 0;
  std::uint64_t task = 0;
};

/// Work/span accounting over sequential stages of concurrent tasks.
///
/// work = sum of all call work. span = sum over stages of the largest task
/// total within the stage. Totals depend only on the logs, never on thread
/// timing.
class WorkSpanCounter {
 public:
  /// One stage with a single task.
  void record_sequential(const OracleCall& call);
  void record_sequential(const TaskLog& log);

  /// One stage whose tasks ran concurrently. Empty tasks are ignored; a
  /// stage with no calls is not counted.
  void record_stage(std::span<const TaskLog> tasks);

  /// Appends another counter's stages after this one's.
  void append(const WorkSpanCounter& other);

  std::uint64_t work() const { return work_; }
  std::uint64_t span() const { return span_; }
  std::uint64_t stages() const { return stages_; }
  std::uint64_t oracle_calls() const;  // kDijkstra + kFewNeg entries
  std::span<const LoggedCall> log() const { return log_; }

  /// Critical path rebuilt from a call log alone.
  static std::uint64_t recompute_span(std::span<const LoggedCall> log);

 private:
  std::uint64_t work_ = 0;
  std::uint64_t span_ = 0;
  std::uint64_t stages_ = 0;
  std::vector<LoggedCall> log_;
};

}  // namespace negsssp
