#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace dgc {

// One simulation tick's observables.
struct TraceRecord {
  std::int64_t tick = 0;
  int covered = 0;
  std::vector<int> positions;

  bool operator==(const TraceRecord&) const = default;
};

// CSV with header "tick,covered,pos_0,...,pos_{m-1}".
void write_trace_csv(const std::vector<TraceRecord>& trace, std::ostream& out);
void save_trace_csv(const std::vector<TraceRecord>& trace,
                    const std::string& path);
std::vector<TraceRecord> read_trace_csv(std::istream& in);
std::vector<TraceRecord> load_trace_csv(const std::string& path);

}  // namespace dgc
