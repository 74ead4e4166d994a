#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "kspec/closedform.hpp"
#include "kspec/corpus.hpp"
#include "record.hpp"

namespace kspec::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string vars;
  std::optional<int> kmax;
  std::uint64_t seed = 0;
  bool json = false;
  std::string arith = "auto";
  bool exact = false;
  bool timings = false;
  std::string catalog;
  std::string binary_form;
};

void add_common(CLI::App* sc, Common& c) {
  sc->add_option("poly", c.input, "Homogeneous polynomial, e.g. \"x^2*y^2 + z^4\"");
  sc->add_option("-v,--vars", c.vars, "Ordered variable list, e.g. x,y,z (default: identifiers of the input, sorted)");
  sc->add_option("--kmax", c.kmax, "Top degree of the window (default n*d + d)")->check(CLI::PositiveNumber);
  sc->add_option("--seed", c.seed, "Seed of the generic linear form and of the primes");
  sc->add_option("--arith", c.arith, "exact, modular or auto")
      ->check(CLI::IsMember({"exact", "modular", "mod", "auto"}));
  sc->add_flag("--exact", c.exact, "Same as --arith exact");
  sc->add_flag("--json", c.json, "Emit JSON instead of text");
  sc->add_flag("--timings", c.timings, "Report stage timings (output is no longer reproducible)");
}

ArithMode arith_of(const Common& c) {
  if (c.exact) return ArithMode::Exact;
  return *parse_arith_mode(c.arith);
}

struct Input {
  std::vector<std::string> vars;
  HomogeneousPoly f;
  RunRequest req;
};

Input resolve(const Common& c) {
  if (c.input.empty()) throw UsageError("missing polynomial");
  Input in;
  in.vars = c.vars.empty() ? infer_vars(c.input) : split_vars(c.vars);
  if (in.vars.size() < 2)
    throw UsageError("need at least two variables; pass them with -v");
  in.f = parse_poly(c.input, in.vars);
  in.req = {c.input, in.vars, c.seed, c.kmax, arith_of(c)};
  return in;
}

PipelineResult run_request(const RunRequest& req, const HomogeneousPoly& f) {
  PipelineOptions opt;
  opt.k_max = req.k_max;
  opt.seed = req.seed;
  opt.arith = req.arith;
  return run_pipeline(f, opt);
}

PipelineResult run_request(const RunRequest& req) { return run_request(req, parse_poly(req.input, req.vars)); }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string signed_str(long v) { return (v > 0 ? "+" : "") + std::to_string(v); }

std::string header(const PipelineResult& res, const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << "f = " << res.f.to_string(vars) << "   (n = " << res.table.n << ", d = " << res.table.d << ", vars "
     << join(vars, ",") << ")\n";
  os << "window k <= " << res.k_max << ", linear form seed " << res.table.seed << ", arith " << res.arith
     << (res.exact_fallback ? " (fallback)" : "") << '\n';
  return os.str();
}

std::string timings_line(const PipelineResult& res) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << "timings: koszul " << res.timings.koszul << "s, decomp "
     << res.timings.decomp << "s, polespec " << res.timings.polespec << "s\n";
  return os.str();
}

std::string identities_block(const CorollaryReport& rep) {
  std::ostringstream os;
  os << "identities: " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checks << " checks)\n";
  for (const auto& v : rep.violations) os << "  violation " << v.id << " at k = " << v.k << ": " << v.detail << '\n';
  return os.str();
}

std::string torsion_lines(const SpectralResult& s) {
  if (s.torsion.all_zero()) return "torsion profile: zero\n";
  std::ostringstream os;
  os << "torsion profile:\n";
  for (std::size_t i = 0; i < s.torsion.by_stage.size(); ++i) {
    const auto& row = s.torsion.by_stage[i];
    if (std::all_of(row.begin(), row.end(), [](long x) { return x == 0; })) continue;
    os << "  d(" << i + 2 << "):";
    for (std::size_t q = 0; q < row.size(); ++q)
      if (row[q]) os << ' ' << q << ':' << row[q];
    os << '\n';
  }
  return os.str();
}

std::string e2_line(const SpectralResult& s) {
  return std::string("E2: ") + (s.degenerate ? "degenerate" : "not degenerate") + " (r* = " +
         std::to_string(s.r_eff) + ")\n";
}

std::string spectrum_listing(const PoleSpectrum& sp) {
  std::vector<std::array<std::string, 3>> rows{{"k", "k/d", "mult"}};
  for (const auto& t : sp.support)
    rows.push_back({std::to_string(t.k), rational_to_string(t.exponent), signed_str(t.multiplicity)});
  std::array<std::size_t, 3> w{};
  for (const auto& r : rows)
    for (int i = 0; i < 3; ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  for (const auto& r : rows)
    os << std::setw(w[0]) << r[0] << "  " << std::setw(w[1]) << r[1] << "  " << std::setw(w[2]) << r[2] << '\n';
  os << "Sp_P = " << sp.to_string() << '\n';
  os << "truncated: " << (sp.truncated ? "yes" : "no") << " (valid through k = " << sp.valid_top << ")\n";
  os << "r* = " << sp.stabilization_stage << '\n';
  return os.str();
}

// ---- commands ----------------------------------------------------------------

int emit_record(const Common& c, const Input& in, const PipelineResult& res, std::ostream& out, bool table) {
  const json rec = make_record(in.req, res, c.timings);
  if (!c.catalog.empty()) catalog_append(rec, c.catalog);
  if (c.json) {
    out << rec.dump(2) << '\n';
  } else {
    out << header(res, in.vars);
    if (table) {
      out << format_table(res);
      out << "tau = " << res.table.tau << ", type " << to_string(res.table.type) << '\n';
      out << identities_block(res.corollaries);
      if (res.spectral) out << e2_line(*res.spectral);
    } else if (res.spectral) {
      out << spectrum_listing(res.spectral->spectrum) << torsion_lines(*res.spectral) << e2_line(*res.spectral);
      if (!res.corollaries.pass) out << identities_block(res.corollaries);
    }
    if (c.timings) out << timings_line(res);
  }
  return res.corollaries.pass ? kOk : kViolation;
}

Input binary_input(const Common& c, const BinaryFormFactorization& fac) {
  Input in;
  in.vars = {"x", "y"};
  in.f = fac.to_poly();
  in.req = {in.f.to_string(in.vars), in.vars, c.seed, c.kmax, arith_of(c)};
  return in;
}

std::vector<std::string> table_mismatches(const InvariantTable& a, const InvariantTable& b) {
  std::vector<std::string> out;
  auto cmp = [&](const char* name, const std::vector<long>& x, const std::vector<long>& y) {
    if (x != y) out.push_back(name);
  };
  cmp("gamma", a.gamma, b.gamma);
  cmp("mu'", a.mu_torsion, b.mu_torsion);
  cmp("mu''", a.mu_free, b.mu_free);
  cmp("mu", a.mu, b.mu);
  cmp("nu", a.nu, b.nu);
  if (a.tau != b.tau) out.push_back("tau");
  return out;
}

int cmd_invariants(const Common& c, std::ostream& out) {
  if (!c.binary_form.empty()) {
    const auto fac = BinaryFormFactorization::parse(c.binary_form);
    const Input in = binary_input(c, fac);
    const PipelineResult res = run_request(in.req, in.f);
    const auto closed = lemma23_table(fac, res.k_max);
    const auto bad = table_mismatches(res.table, closed);
    int code = emit_record(c, in, res, out, true);
    if (!c.json) out << "closed form: " << (bad.empty() ? "agree" : "DIFFER in " + join(bad, ", ")) << '\n';
    return bad.empty() ? code : kViolation;
  }
  const Input in = resolve(c);
  return emit_record(c, in, run_request(in.req, in.f), out, true);
}

int cmd_spectrum(const Common& c, std::ostream& out) {
  if (c.binary_form.empty()) {
    const Input in = resolve(c);
    return emit_record(c, in, run_request(in.req, in.f), out, false);
  }
  const auto fac = BinaryFormFactorization::parse(c.binary_form);
  const auto parts = prop34_parts(fac);
  const PoleSpectrum closed = parts.total();
  const Input in = binary_input(c, fac);
  const PipelineResult res = run_request(in.req, in.f);
  const PoleSpectrum& engine = res.spectral->spectrum;
  const bool agree = closed == engine;
  const json rec = make_record(in.req, res, c.timings);
  if (!c.catalog.empty()) catalog_append(rec, c.catalog);
  if (c.json) {
    json j = {{"binary_form", c.binary_form},
              {"closed_form", spectrum_json(closed)},
              {"closed_form_parts", {{"sp0", spectrum_json(parts.sp0)}, {"sp1", spectrum_json(parts.sp1)}}},
              {"engine", rec},
              {"agree", agree}};
    out << j.dump(2) << '\n';
  } else {
    out << "binary form " << c.binary_form << "   (d = " << fac.d() << ", r = " << fac.r() << ", e = " << fac.e()
        << ")\n";
    out << "closed form:\n" << spectrum_listing(closed);
    out << "  Sp_P^0 = " << parts.sp0.to_string() << "\n  Sp_P^1 = " << parts.sp1.to_string() << '\n';
    out << "engine:\n" << header(res, in.vars) << spectrum_listing(engine) << torsion_lines(*res.spectral)
        << e2_line(*res.spectral);
    out << "agree: " << (agree ? "yes" : "NO") << '\n';
    if (c.timings) out << timings_line(res);
  }
  if (!res.corollaries.pass) return kViolation;
  return agree ? kOk : kViolation;
}

// ---- check -------------------------------------------------------------------

struct CheckOpts {
  Common c;
  std::string alpha_min;
  std::string exponents_file;
  bool nodal = false;
  std::optional<int> rspan;
  bool builtin = false;
  std::string corpus;
  std::string catalog_in;
};

std::vector<Rational> parse_exponent_list(const std::string& text) {
  std::vector<Rational> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(parse_rational(tok));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct EntryOutcome {
  std::string name;
  int code = kOk;
  std::vector<std::string> notes;     // passed checks
  std::vector<std::string> failures;  // failed checks
};

struct EntryChecks {
  bool nodal = false;
  std::optional<int> rspan;
  std::optional<Rational> alpha_min;
  std::optional<std::vector<Rational>> exponents;
  std::optional<bool> expect_torsion;  // true: nonzero, false: zero
};

EntryOutcome check_entry(const std::string& name, const RunRequest& req, const EntryChecks& ec) {
  EntryOutcome o;
  o.name = name;
  auto note = [&](bool ok, const std::string& what) {
    (ok ? o.notes : o.failures).push_back(what);
    if (!ok) o.code = std::max<int>(o.code, kViolation);
  };
  PipelineResult res;
  try {
    res = run_request(req);
  } catch (const NotStabilized& e) {
    o.failures.push_back(std::string("not stabilized: ") + e.what());
    o.code = kAssumption;
    return o;
  } catch (const AssumptionFailure& e) {
    o.failures.push_back(std::string("assumption: ") + e.what());
    o.code = kAssumption;
    return o;
  } catch (const GenericityFailure& e) {
    o.failures.push_back(std::string("genericity: ") + e.what());
    o.code = kAssumption;
    return o;
  }
  const auto& tab = res.table;
  {
    std::string s = "identities (" + std::to_string(res.corollaries.checks) + " checks)";
    for (const auto& v : res.corollaries.violations) s += "; " + v.id + " at k = " + std::to_string(v.k);
    note(res.corollaries.pass, s);
  }
  if (ec.rspan) {
    const auto r = check_lemma21(tab, *ec.rspan);
    note(r.pass, "low-degree mu'': " + r.detail);
  }
  if (ec.nodal) {
    const auto r = check_nodal_vanishing(tab);
    note(r.pass, "nodal vanishing: " + r.detail);
  }
  const auto& s = *res.spectral;
  if (ec.alpha_min) {
    const auto r = check_exponent_bounds(tab, s, *ec.alpha_min, ec.exponents);
    std::string txt = "exponent bounds (" + std::to_string(r.checks) + " checks)";
    for (const auto& v : r.violations) txt += "; " + v.id + " at k = " + std::to_string(v.k) + ": " + v.detail;
    for (const auto& sk : r.skipped) txt += "; skipped " + sk;
    note(r.pass, txt);
  }
  if (ec.expect_torsion) {
    const bool zero = s.torsion.all_zero();
    if (*ec.expect_torsion)
      note(!zero, std::string("torsion profile nonzero") + (s.spectrum.truncated ? ", truncated" : ""));
    else
      note(zero && !s.spectrum.truncated, std::string("torsion profile zero") +
                                              (s.spectrum.truncated ? ", but spectrum truncated" : ", E2 degenerate"));
  }
  return o;
}

EntryChecks checks_for(const CorpusEntry& e) {
  EntryChecks ec;
  ec.nodal = e.has("nodal");
  ec.rspan = e.rspan;
  if (e.alpha_min) ec.alpha_min = parse_rational(*e.alpha_min);
  if (e.local_exponents) ec.exponents = parse_exponent_list(*e.local_exponents);
  if (e.has("wh") || e.has("smooth")) ec.expect_torsion = false;
  if (e.has("nonwh")) ec.expect_torsion = true;
  return ec;
}

RunRequest request_for(const CorpusEntry& e, const Common& c) {
  RunRequest req;
  req.input = e.poly;
  req.vars = e.vars.empty() ? infer_vars(e.poly) : split_vars(e.vars);
  req.seed = c.seed;
  req.k_max = c.kmax;
  req.arith = arith_of(c);
  return req;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::vector<CorpusEntry> out;
  std::istringstream is(read_file(path));
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const json j = json::parse(line);
      CorpusEntry e;
      e.poly = j.at("poly").get<std::string>();
      e.name = j.value("name", e.poly);
      e.vars = j.value("vars", std::string());
      e.tags = j.value("tags", std::vector<std::string>{});
      if (j.contains("alpha_min")) e.alpha_min = j.at("alpha_min").get<std::string>();
      if (j.contains("exponents")) e.local_exponents = j.at("exponents").get<std::string>();
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

int report(const std::vector<EntryOutcome>& outs, bool as_json, std::ostream& out) {
  int code = kOk;
  int failed = 0;
  json arr = json::array();
  for (const auto& o : outs) {
    code = std::max(code, o.code);
    failed += o.code != kOk;
    if (as_json) {
      arr.push_back({{"name", o.name}, {"pass", o.code == kOk}, {"passed", o.notes}, {"failed", o.failures}});
      continue;
    }
    out << (o.code == kOk ? "PASS " : "FAIL ") << o.name << '\n';
    for (const auto& f : o.failures) out << "  fail: " << f << '\n';
    for (const auto& n : o.notes) out << "  ok:   " << n << '\n';
  }
  if (as_json) {
    out << json{{"entries", arr}, {"pass", code == kOk}, {"failed", failed}}.dump(2) << '\n';
  } else {
    out << (code == kOk ? "all " + std::to_string(outs.size()) + " passed"
                        : std::to_string(failed) + " of " + std::to_string(outs.size()) + " failed")
        << '\n';
  }
  return code;
}

int check_catalog(const CheckOpts& o, std::ostream& out) {
  const auto recs = catalog_read(o.catalog_in);
  int code = kOk;
  json arr = json::array();
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const json& rec = recs[i];
    const std::string label = "record " + std::to_string(i + 1);
    const std::string ver = rec.value("version", std::string("?"));
    json entry = {{"record", i + 1}};
    if (ver != engine_version()) {
      entry["status"] = "skipped";
      entry["reason"] = "version " + ver;
      if (!o.c.json) out << "SKIP " << label << ": written by version " << ver << '\n';
      arr.push_back(entry);
      continue;
    }
    const RunRequest req = request_from_record(rec);
    const auto diffs = record_diff(rec, make_record(req, run_request(req), false));
    entry["status"] = diffs.empty() ? "ok" : "diff";
    entry["diff"] = diffs;
    if (!diffs.empty()) code = kViolation;
    if (!o.c.json) {
      out << (diffs.empty() ? "OK   " : "DIFF ") << label << " (" << req.input << ")\n";
      for (const auto& d : diffs) out << "  " << d << ": stored " << rec.at(json::json_pointer(d)).dump() << '\n';
    }
    arr.push_back(entry);
  }
  if (o.c.json) out << json{{"records", arr}, {"pass", code == kOk}}.dump(2) << '\n';
  else out << (code == kOk ? "catalog consistent" : "catalog differs") << '\n';
  return code;
}

int cmd_check(const CheckOpts& o, std::ostream& out) {
  const int sources = !o.c.input.empty() + o.builtin + !o.corpus.empty() + !o.catalog_in.empty();
  if (sources != 1) throw UsageError("give exactly one of: a polynomial, --builtin, --corpus, --catalog");
  if (!o.catalog_in.empty()) return check_catalog(o, out);

  std::vector<EntryOutcome> outs;
  if (!o.c.input.empty()) {
    const Input in = resolve(o.c);
    EntryChecks ec;
    ec.nodal = o.nodal;
    ec.rspan = o.rspan;
    if (!o.alpha_min.empty()) ec.alpha_min = parse_rational(o.alpha_min);
    if (!o.exponents_file.empty()) ec.exponents = parse_exponent_list(read_file(o.exponents_file));
    outs.push_back(check_entry(in.f.to_string(in.vars), in.req, ec));
    return report(outs, o.c.json, out);
  }
  const auto corpus = o.builtin ? builtin_corpus() : read_corpus(o.corpus);
  for (const auto& e : corpus) outs.push_back(check_entry(e.name, request_for(e, o.c), checks_for(e)));
  return report(outs, o.c.json, out);
}

template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const RecordFormatError& e) {
    err << "bad record: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const NotStabilized& e) {
    err << "not stabilized: " << e.what() << '\n';
    return kAssumption;
  } catch (const AssumptionFailure& e) {
    err << "assumption failed: " << e.what() << '\n';
    return kAssumption;
  } catch (const GenericityFailure& e) {
    err << "genericity failure: " << e.what() << '\n';
    return kAssumption;
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << '\n';
    return kViolation;
  } catch (const WellDefinednessViolation& e) {
    err << "well-definedness violation: " << e.what() << '\n';
    return kViolation;
  } catch (const LiftFailure& e) {
    err << "lift failure: " << e.what() << '\n';
    return kViolation;
  } catch (const BoundViolation& e) {
    err << "bound violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

std::vector<std::string> infer_vars(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char ch = text[i];
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      names.emplace(text.substr(i, j - i));
      i = j;
    } else if (std::isdigit(ch)) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

std::string format_table(const PipelineResult& res) {
  const auto& t = res.table;
  const int K = res.k_max;
  const SpectralResult* s = res.spectral ? &*res.spectral : nullptr;

  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  auto cell = [](long v) { return v == 0 ? std::string() : std::to_string(v); };
  auto seq_row = [&](const std::string& label, const std::vector<long>& seq) {
    std::vector<std::string> cells;
    for (int k = 1; k <= K; ++k) cells.push_back(cell(seq.at(k)));
    rows.emplace_back(label, std::move(cells));
  };
  {
    std::vector<std::string> ks;
    for (int k = 1; k <= K; ++k) ks.push_back(std::to_string(k));
    rows.emplace_back("k", std::move(ks));
  }
  seq_row("gamma", t.gamma);
  seq_row("mu'", t.mu_torsion);
  seq_row("mu''", t.mu_free);
  seq_row("mu", t.mu);
  seq_row("nu", t.nu);
  bool marks = false;
  if (s) {
    std::vector<std::string> m2, n2, sp;
    for (int k = 1; k <= K; ++k) {
      const bool mu_ok = s->mu_valid(2, k);
      m2.push_back(mu_ok ? cell(s->mu_at(2, k)) : "?");
      n2.push_back(cell(s->nu_at(2, k)));
      const bool sp_ok = k <= s->spectrum.valid_top;
      sp.push_back(sp_ok ? cell(s->spectrum.at(k)) : "?");
      marks = marks || !mu_ok || !sp_ok;
    }
    rows.emplace_back("mu(2)", std::move(m2));
    rows.emplace_back("nu(2)", std::move(n2));
    rows.emplace_back("Sp_P", std::move(sp));
  }

  std::size_t label_w = 0;
  for (const auto& [label, _] : rows) label_w = std::max(label_w, label.size());
  std::vector<std::size_t> w(K, 1);
  for (const auto& [_, cells] : rows)
    for (int i = 0; i < K; ++i) w[i] = std::max(w[i], cells[i].size());

  std::ostringstream os;
  for (const auto& [label, cells] : rows) {
    std::string line = label + std::string(label_w - label.size(), ' ');
    for (int i = 0; i < K; ++i) line += "  " + std::string(w[i] - cells[i].size(), ' ') + cells[i];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  if (marks) os << "(? = needs degrees beyond the window)\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Koszul cohomology, torsion splitting and pole order spectrum of homogeneous polynomials",
               "koszulspec"};
  app.set_version_flag("--version", std::string(engine_version()));
  app.require_subcommand(1);

  Common inv, spec;
  auto* sc_inv = app.add_subcommand("invariants", "Invariant table gamma, mu', mu'', mu, nu, mu(2), nu(2), Sp_P");
  add_common(sc_inv, inv);
  sc_inv->add_option("--binary-form", inv.binary_form, "Binary form as lin:mult,... and compare with closed forms")
      ->excludes("poly")
      ->excludes("--vars");
  sc_inv->add_option("--catalog", inv.catalog, "Append the run record to this JSON-lines file");

  auto* sc_spec = app.add_subcommand("spectrum", "Pole order spectrum with stage diagnostics");
  add_common(sc_spec, spec);
  sc_spec->add_option("--binary-form", spec.binary_form, "Binary form as lin:mult,... and compare with closed forms")
      ->excludes("poly")
      ->excludes("--vars");
  sc_spec->add_option("--catalog", spec.catalog, "Append the run record to this JSON-lines file");

  CheckOpts chk;
  auto* sc_chk = app.add_subcommand("check", "Identity, bound and consistency checks");
  add_common(sc_chk, chk.c);
  sc_chk->add_option("--alpha-min", chk.alpha_min, "Minimal local exponent p/q (bounds for n = 3)");
  sc_chk->add_option("--exponents", chk.exponents_file, "File with the local exponents, whitespace separated")
      ->needs("--alpha-min");
  sc_chk->add_flag("--nodal", chk.nodal, "Check the nodal vanishing range");
  sc_chk->add_option("--rspan", chk.rspan, "Check mu''_n = 1 and mu''_{n+1} >= RSPAN");
  sc_chk->add_flag("--builtin", chk.builtin, "Run the built-in corpus");
  sc_chk->add_option("--corpus", chk.corpus, "JSON-lines corpus file");
  sc_chk->add_option("--catalog", chk.catalog_in, "Recompute every record of a catalog and report differences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    CLI::App* sub = nullptr;
    for (auto* sc : {sc_inv, sc_spec, sc_chk})
      if (sc->parsed()) sub = sc;
    err << (sub ? sub->help() : app.help());
    return kUsage;
  }

  if (sc_inv->parsed()) return guarded(err, [&] { return cmd_invariants(inv, out); });
  if (sc_spec->parsed()) return guarded(err, [&] { return cmd_spectrum(spec, out); });
  return guarded(err, [&] { return cmd_check(chk, out); });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"koszulspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace kspec::cli
