#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "polylcm/common.hpp"
#include "polylcm/valuations.hpp"

namespace polylcm {

// Serialized output of a CLI run; versioned, round-trips losslessly through
// its JSON form. JSON is the canonical cache format.
struct RunReport {
  int schema = 1;
  std::string version;
  std::string command;
  std::string poly;  // canonical coefficient text; empty for `constants`
  u64 x = 0;
  nlohmann::json config = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::string certification = "deterministic";
  std::optional<double> timing_ms;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);
  std::string serialize() const;  // stable two-space dump, newline-terminated
};

// Content-addressed cache of factor tables: one JSON report plus one compact
// binary factor log per (polynomial, x, L0) triple.
std::string cache_stem(const std::string& poly_canonical, u64 x, u64 L0,
                       ArgumentMode mode);

void write_factor_log(const std::string& path,
                      const std::vector<FactorRecord>& records);
std::vector<FactorRecord> read_factor_log(const std::string& path);

// Returns true and fills `records` when a valid cache entry exists.
bool cache_load(const std::string& dir, const std::string& stem,
                const std::string& poly_canonical, u64 x, u64 L0,
                std::vector<FactorRecord>& records, bool& probabilistic);

void cache_store(const std::string& dir, const std::string& stem,
                 const RunReport& report, const FactorizationTable& table);

}  // namespace polylcm
