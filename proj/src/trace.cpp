#include "dgc/trace.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dgc {

void write_trace_csv(const std::vector<TraceRecord>& trace,
                     std::ostream& out) {
  std::size_t m = trace.empty() ? 0 : trace.front().positions.size();
  out << "tick,covered";
  for (std::size_t i = 0; i < m; ++i) out << ",pos_" << i;
  out << "\n";
  for (const auto& rec : trace) {
    out << rec.tick << ',' << rec.covered;
    for (int p : rec.positions) out << ',' << p;
    out << "\n";
  }
}

void save_trace_csv(const std::vector<TraceRecord>& trace,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_trace_csv(trace, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

std::vector<TraceRecord> read_trace_csv(std::istream& in) {
  std::vector<TraceRecord> trace;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace file");
  if (line.rfind("tick,covered", 0) != 0) {
    throw std::runtime_error("bad trace header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    TraceRecord rec;
    char comma;
    if (!(fields >> rec.tick >> comma >> rec.covered)) {
      throw std::runtime_error("bad trace row: " + line);
    }
    int value;
    while (fields >> comma >> value) rec.positions.push_back(value);
    trace.push_back(std::move(rec));
  }
  return trace;
}

std::vector<TraceRecord> load_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_trace_csv(in);
}

}  // namespace dgc
