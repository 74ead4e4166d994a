#include "record.hpp"

#include <fstream>

namespace kspec::cli {

const char* engine_version() { return KSPEC_VERSION; }

json spectrum_json(const PoleSpectrum& sp) {
  json terms = json::array();
  for (const auto& t : sp.support)
    terms.push_back({{"k", t.k}, {"exponent", rational_to_string(t.exponent)}, {"multiplicity", t.multiplicity}});
  return {{"d", sp.d},
          {"terms", terms},
          {"text", sp.to_string()},
          {"truncated", sp.truncated},
          {"stabilization_stage", sp.stabilization_stage},
          {"valid_top", sp.valid_top}};
}

namespace {

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"id", v.id}, {"k", v.k}, {"detail", v.detail}});
  return out;
}

}  // namespace

json make_record(const RunRequest& req, const PipelineResult& res, bool with_timings) {
  const auto& t = res.table;
  json rec;
  rec["schema"] = kRecordSchema;
  rec["version"] = engine_version();
  rec["input"] = req.input;
  rec["vars"] = req.vars;
  rec["poly"] = res.f.to_string(req.vars);
  rec["n"] = t.n;
  rec["d"] = t.d;
  rec["seed"] = req.seed;
  rec["k_max"] = res.k_max;
  rec["k_max_requested"] = req.k_max ? json(*req.k_max) : json(nullptr);
  rec["arith_mode"] = to_string(req.arith);
  rec["arith"] = res.arith;
  rec["exact_fallback"] = res.exact_fallback;
  rec["tau"] = t.tau;

  json tables = {{"gamma", t.gamma}, {"mu", t.mu}, {"mu_torsion", t.mu_torsion}, {"mu_free", t.mu_free}, {"nu", t.nu}};
  json verdicts;
  verdicts["type"] = to_string(t.type);
  verdicts["linear_form"] = {{"seed", t.seed}, {"y", t.y}, {"draws", t.draws}};
  verdicts["assumption"] = {{"pass", res.assumption.pass},
                            {"stabilized", res.assumption.stabilized},
                            {"h_minus2", res.assumption.h_minus2},
                            {"note", res.assumption.note}};
  verdicts["identities"] = {{"pass", res.corollaries.pass},
                            {"checks", res.corollaries.checks},
                            {"violations", violations_json(res.corollaries.violations)}};

  if (res.spectral) {
    const auto& s = *res.spectral;
    std::vector<long> mu2(s.mu_r.at(2).begin(), s.mu_r.at(2).end());
    std::vector<long> nu2(s.nu_r.at(2).begin(), s.nu_r.at(2).end());
    tables["mu2"] = mu2;
    tables["nu2"] = nu2;
    tables["mu2_valid_top"] = s.k_max - s.d;
    json ranks = json::array();
    for (std::size_t r = 1; r < s.rank.size(); ++r) ranks.push_back(s.rank[r]);
    rec["differential_ranks"] = ranks;
    rec["spectrum"] = spectrum_json(s.spectrum);
    rec["torsion"] = {{"by_stage", s.torsion.by_stage}, {"all_zero", s.torsion.all_zero()}};
    verdicts["e2_degenerate"] = s.degenerate;
    verdicts["stabilization_stage"] = s.r_eff;
  } else {
    rec["differential_ranks"] = nullptr;
    rec["spectrum"] = nullptr;
    rec["torsion"] = nullptr;
    verdicts["e2_degenerate"] = nullptr;
    verdicts["stabilization_stage"] = nullptr;
  }
  rec["tables"] = tables;
  rec["verdicts"] = verdicts;
  if (with_timings)
    rec["timings"] = {{"koszul", res.timings.koszul}, {"decomp", res.timings.decomp}, {"polespec", res.timings.polespec}};
  else
    rec["timings"] = nullptr;
  return rec;
}

RunRequest request_from_record(const json& rec) {
  RunRequest req;
  try {
    req.input = rec.at("input").get<std::string>();
    req.vars = rec.at("vars").get<std::vector<std::string>>();
    req.seed = rec.at("seed").get<std::uint64_t>();
    if (rec.contains("k_max_requested") && !rec.at("k_max_requested").is_null())
      req.k_max = rec.at("k_max_requested").get<int>();
    const auto mode = parse_arith_mode(rec.value("arith_mode", std::string("auto")));
    if (!mode) throw RecordFormatError("unknown arith_mode");
    req.arith = *mode;
  } catch (const json::exception& e) {
    throw RecordFormatError(std::string("malformed record: ") + e.what());
  }
  return req;
}

void catalog_append(const json& rec, const std::string& path) {
  std::ofstream out(path, std::ios::app | std::ios::binary);
  if (!out) throw IoError("cannot open catalog " + path);
  out << rec.dump() << '\n';
  out.flush();
  if (!out) throw IoError("write to catalog " + path + " failed");
}

std::vector<json> catalog_read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open catalog " + path);
  std::vector<json> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::parse_error& e) {
      throw RecordFormatError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw IoError("read from catalog " + path + " failed");
  return out;
}

std::vector<std::string> record_diff(const json& stored, const json& fresh) {
  std::vector<std::string> out;
  for (const auto& op : json::diff(stored, fresh)) {
    const std::string path = op.at("path").get<std::string>();
    if (path.rfind("/timings", 0) == 0) continue;
    if (op.at("op") == "remove") {
      // Extra object keys in old or newer records are tolerated; missing array
      // entries are not.
      const json::json_pointer ptr(path);
      if (stored.at(ptr.parent_pointer()).is_object()) continue;
    }
    out.push_back(path);
  }
  return out;
}

}  // namespace kspec::cli
