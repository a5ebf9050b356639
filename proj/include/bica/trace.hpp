#ifndef BICA_TRACE_HPP_
#define BICA_TRACE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/agents.hpp"

namespace bica::trace {

inline constexpr int kSchemaVersion = 1;

struct TraceMeta {
  std::string run;
  uint64_t seed = 0;
  std::string mode;
  std::string condition;  // "id", "ood", "train", "live", ...
  bool operator==(const TraceMeta&) const = default;
};

struct Trace {
  TraceMeta meta;
  std::vector<Episode> episodes;
};

nlohmann::ordered_json header_json(const TraceMeta& meta);
nlohmann::ordered_json episode_json(const Episode& ep, int index);
nlohmann::ordered_json step_json(const StepRecord& r, int episode);
nlohmann::ordered_json end_json(const Episode& ep, int index);

// Line-delimited JSON: header, then per episode an "episode" line, its steps and an "end" line.
void write_trace(std::ostream& out, const TraceMeta& meta, const std::vector<Episode>& episodes);
void write_trace_file(const std::string& path, const TraceMeta& meta, const std::vector<Episode>& episodes);

// Parsed episodes carry both sides' network feature vectors rebuilt from the map and pose.
Trace read_trace(std::istream& in);
Trace read_trace_file(const std::string& path);

// Schema errors for one record; empty when valid.
std::vector<std::string> validate_record(const nlohmann::json& j);
// Checks every line plus the record ordering; each error is prefixed with its line number.
std::vector<std::string> validate_trace(std::istream& in);

// Rebuilds the observation-derived inputs of a step from the map and the recorded pose.
void rebuild_inputs(const grid::MapInstance& map, StepRecord& r);

}  // namespace bica::trace

#endif  // BICA_TRACE_HPP_
