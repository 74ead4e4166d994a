#pragma once

// RunRecord: the JSON form of one pipeline run, and the JSON-lines catalog.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "kspec/pipeline.hpp"

namespace kspec::cli {

using json = nlohmann::json;

inline constexpr int kRecordSchema = 1;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RecordFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// What the user asked for; together with the engine version this fixes the record.
struct RunRequest {
  std::string input;
  std::vector<std::string> vars;
  std::uint64_t seed = 0;
  std::optional<int> k_max;
  ArithMode arith = ArithMode::Auto;
};

const char* engine_version();

json spectrum_json(const PoleSpectrum& sp);
json make_record(const RunRequest& req, const PipelineResult& res, bool with_timings);

/// Inverse of the request part of a record; throws RecordFormatError on
/// missing or ill-typed fields. Unknown fields are ignored.
RunRequest request_from_record(const json& rec);

/// Appends one line. Throws IoError.
void catalog_append(const json& rec, const std::string& path);
/// One record per non-empty line. Throws IoError, or RecordFormatError
/// naming the offending line.
std::vector<json> catalog_read(const std::string& path);

/// JSON pointers where `fresh` disagrees with `stored`, ignoring timings and
/// fields that only `stored` carries.
std::vector<std::string> record_diff(const json& stored, const json& fresh);

}  // namespace kspec::cli
