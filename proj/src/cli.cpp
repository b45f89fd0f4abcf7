#include "eulersum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulersum/euler_sums.hpp"
#include "eulersum/hyperharmonic.hpp"
#include "eulersum/mhn.hpp"
#include "eulersum/symmetric.hpp"
#include "eulersum/verify.hpp"
#include "eulersum/zeta.hpp"

namespace eulersum {

std::vector<unsigned> parse_range(const std::string& text) {
  auto to_uint = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw domain_error("malformed range '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {to_uint(text)};
  const unsigned lo = to_uint(text.substr(0, dots));
  const unsigned hi = to_uint(text.substr(dots + 2));
  if (hi < lo) throw domain_error("empty range '" + text + "'");
  std::vector<unsigned> v;
  for (unsigned x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

namespace {

using ordered_json = nlohmann::ordered_json;
using Row = std::vector<std::pair<std::string, std::string>>;

enum class Format { table, json, csv };

struct Config {
  unsigned precision = kDefaultDigits;
  std::uint64_t N = 1000000;
  double margin = 4.0;
  std::string format = "table";
  std::uint64_t seed = 42;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("unknown format '" + s + "' (expected table, json or csv)");
}

void validate(const Config& c) {
  if (c.precision < 15) throw UsageError("precision must be >= 15 digits");
  if (c.N < 10) throw UsageError("N must be >= 10");
  if (!(c.margin > 0)) throw UsageError("margin must be > 0");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void emit_rows(const std::vector<Row>& rows, Format f, std::ostream& out) {
  if (f == Format::json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json o = ordered_json::object();
      for (const auto& [k, v] : row) o[k] = v;
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (rows.empty()) return;
  if (f == Format::csv) {
    for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << csv_field(rows[0][i].first);
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i].second);
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(rows[0].size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = rows[0][i].first.size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].second.size());
  auto cell = [&](std::size_t i, const std::string& text) {
    if (i) out << "  ";
    if (i + 1 < width.size()) out << std::left << std::setw(static_cast<int>(width[i]));
    out << text;
  };
  for (std::size_t i = 0; i < width.size(); ++i) cell(i, rows[0][i].first);
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) cell(i, row[i].second);
    out << "\n";
  }
}

Composition parse_composition(const std::string& text) {
  std::vector<unsigned> parts;
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') cleaned += ch;
  std::stringstream ss(cleaned);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("malformed index '" + text + "' (expected e.g. 3,1,1)");
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  return Composition(std::move(parts));
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string kind;
  std::optional<unsigned> n, m, k, p, r;
  std::optional<std::uint64_t> N;
  std::string s;
  std::string method = "closed";
  bool star = false;
};

template <class T>
T need(const std::optional<T>& v, const char* name, const std::string& kind) {
  if (!v) throw UsageError("compute " + kind + ": missing --" + std::string(name));
  return *v;
}

Row exact_row(const std::string& kind, Row params, const Rational& v) {
  Row row{{"kind", kind}};
  row.insert(row.end(), params.begin(), params.end());
  row.emplace_back("value", v.get_str());
  row.emplace_back("method", "exact");
  return row;
}

Row series_row(const std::string& kind, Row params, const SeriesValue& v) {
  Row row{{"kind", kind}};
  row.insert(row.end(), params.begin(), params.end());
  row.emplace_back("value", v.value_string());
  row.emplace_back("error_bound", format_bound(v.error_bound));
  row.emplace_back("method", to_string(v.method));
  row.emplace_back("digits", std::to_string(v.digits));
  row.emplace_back("rigorous", v.rigorous ? "true" : "false");
  if (v.exact) row.emplace_back("exact", v.exact->get_str());
  return row;
}

int cmd_compute(const ComputeArgs& a, const Config& cfg, std::ostream& out) {
  const Format f = parse_format(cfg.format);
  const std::string& kind = a.kind;
  auto u = [](unsigned v) { return std::to_string(v); };
  std::optional<Rational> exact;
  std::optional<SeriesValue> series;
  Row params;

  if (kind == "mhn" || kind == "mhsn") {
    const unsigned n = need(a.n, "n", kind);
    const Composition s = parse_composition(a.s.empty() ? throw UsageError("compute " + kind + ": missing --s") : a.s);
    params = {{"n", u(n)}, {"s", to_string(s)}};
    exact = kind == "mhn" ? mhn(n, s) : mhsn(n, s);
  } else if (kind == "hyperharmonic") {
    const unsigned n = need(a.n, "n", kind), m = need(a.m, "m", kind);
    params = {{"n", u(n)}, {"m", u(m)}};
    exact = hyperharmonic(n, m);
  } else if (kind == "gen-hh") {
    const unsigned n = need(a.n, "n", kind), m = need(a.m, "m", kind), k = need(a.k, "k", kind);
    params = {{"n", u(n)}, {"m", u(m)}, {"k", u(k)}};
    exact = a.star ? gen_hh_star(n, m, k) : gen_hh_direct({n, m, k});
  } else if (kind == "stirling") {
    const unsigned n = need(a.n, "n", kind), k = need(a.k, "k", kind);
    params = {{"n", u(n)}, {"k", u(k)}};
    exact = Rational(stirling1(n, k));
  } else if (kind == "bell") {
    const unsigned n = need(a.n, "n", kind), k = need(a.k, "k", kind);
    params = {{"k", u(k)}, {"n", u(n)}};
    exact = bell_harmonic(k, n);
  } else if (kind == "zeta") {
    const unsigned p = need(a.p, "p", kind);
    params = {{"p", u(p)}};
    series = riemann_zeta(p, cfg.precision);
  } else if (kind == "mzv") {
    if (a.s.empty()) throw UsageError("compute mzv: missing --s");
    const Composition s = parse_composition(a.s);
    params = {{"s", to_string(s)}};
    const bool height_one = !s.empty() && std::all_of(s.parts.begin() + 1, s.parts.end(), [](unsigned x) { return x == 1; });
    if (a.star) {
      params.emplace_back("N", std::to_string(a.N.value_or(cfg.N)));
      series = mzsv_truncated(s, a.N.value_or(cfg.N), cfg.precision);
    } else if (height_one && !a.N) {
      series = mzv_height_one(s.parts.front(), static_cast<unsigned>(s.depth() - 1), cfg.precision);
    } else {
      params.emplace_back("N", std::to_string(a.N.value_or(cfg.N)));
      series = mzv_truncated(s, a.N.value_or(cfg.N), cfg.precision);
    }
  } else if (kind == "U" || kind == "V") {
    const unsigned m = need(a.m, "m", kind), r = a.r.value_or(0), p = need(a.p, "p", kind);
    params = {{"m", u(m)}, {"r", u(r)}, {"p", u(p)}};
    if (kind == "U" && a.method == "closed") {
      series = u_closed(m, r, p, cfg.precision);
    } else if (a.method == "truncated" || kind == "V") {
      if (kind == "V" && a.method == "closed") throw UsageError("compute V: only --method truncated is available");
      const std::uint64_t N = a.N.value_or(cfg.N);
      params.emplace_back("N", std::to_string(N));
      series = kind == "U" ? u_truncated(m, r, p, N, cfg.precision) : v_truncated(m, r, p, N, cfg.precision);
    } else {
      throw UsageError("unknown method '" + a.method + "' (expected closed or truncated)");
    }
  } else if (kind == "S") {
    const unsigned k = need(a.k, "k", kind), m = need(a.m, "m", kind), p = need(a.p, "p", kind);
    params = {{"k", u(k)}, {"m", u(m)}, {"p", u(p)}};
    if (m == 0) throw domain_error("S: requires m >= 1");
    if (a.method == "closed") {
      if (p < m + 1) throw domain_error("S_closed: requires p >= m+1 (convergence condition)");
      series = s_closed(k, m - 1, p, cfg.precision);
    } else if (a.method == "truncated") {
      const std::uint64_t N = a.N.value_or(cfg.N);
      params.emplace_back("N", std::to_string(N));
      series = s_truncated({k, m, p}, N, cfg.precision);
    } else {
      throw UsageError("unknown method '" + a.method + "' (expected closed or truncated)");
    }
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }

  const Row row = exact ? exact_row(kind, params, *exact) : series_row(kind, params, *series);
  if (f == Format::table) {
    out << (exact ? exact->get_str() : series->render()) << "\n";
    if (series && series->exact) out << "exact partial sum: " << series->exact->get_str() << "\n";
    return kExitOk;
  }
  if (f == Format::json) {
    ordered_json o = ordered_json::object();
    for (const auto& [key, v] : row) o[key] = v;
    out << o.dump(2) << "\n";
    return kExitOk;
  }
  emit_rows({row}, f, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite = "all";
  std::string out_path;
  GridLimits grid;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw UsageError("unknown suite '" + a.suite + "' (expected exact, numeric or all)");
  const Format f = parse_format(cfg.format);
  SuiteOptions o;
  o.suite = *suite;
  o.grid = a.grid;
  o.grid.N = cfg.N;
  o.seed = cfg.seed;
  o.margin = cfg.margin;
  o.digits = cfg.precision;
  o.timings = a.timings;
  try {
    o.grid.validate();
  } catch (const domain_error& e) {
    throw UsageError(e.what());
  }

  const auto reports = run_suite(o);
  const RunSummary s = summarize(reports, o.suite);
  const std::string doc = serialize_run(o, reports);

  if (!a.out_path.empty()) {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << a.out_path << "' for writing\n";
      return kExitIo;
    }
    file << doc;
    file.flush();
    if (!file) {
      err << "error: failed writing '" << a.out_path << "'\n";
      return kExitIo;
    }
  }

  if (f == Format::json && a.out_path.empty()) {
    out << doc;
  } else {
    std::map<IdentityId, std::pair<std::size_t, std::size_t>> per;
    for (const auto& r : reports) {
      auto& e = per[r.identity.id];
      ++e.first;
      if (r.pass) ++e.second;
    }
    std::vector<Row> rows;
    for (const auto& [id, counts] : per)
      rows.push_back({{"identity", std::string(identity_label(id))},
                      {"cases", std::to_string(counts.first)},
                      {"passed", std::to_string(counts.second)},
                      {"failed", std::to_string(counts.first - counts.second)}});
    emit_rows(rows, f == Format::json ? Format::table : f, out);
    for (const auto& r : reports) {
      if (r.pass) continue;
      out << "FAIL " << identity_label(r.identity.id);
      for (const auto& [k, v] : r.identity.params) out << ' ' << k << '=' << v.get_str();
      out << " discrepancy=" << r.discrepancy << " tolerance=" << r.tolerance;
      if (!r.note.empty()) out << " (" << r.note << ")";
      out << "\n";
    }
    for (IdentityId id : s.missing) out << "MISSING " << identity_label(id) << "\n";
    out << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed << "\n";
  }
  return s.ok() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
  std::string target;
  std::string k = "1", m = "1", p = "2", r = "0";
  unsigned max_weight = 8;
};

void add_comparison(Row& row, const SeriesValue& closed, const SeriesValue& trunc, double margin) {
  WorkingPrecision scope(std::max(closed.digits, trunc.digits) + kGuardDigits);
  const BigFloat d = abs(closed.value - trunc.value);
  const BigFloat tol = BigFloat(margin) * (closed.error_bound + trunc.error_bound);
  row.emplace_back("closed", closed.value_string());
  row.emplace_back("closed_bound", format_bound(closed.error_bound));
  row.emplace_back("truncated", trunc.value_string());
  row.emplace_back("truncated_bound", format_bound(trunc.error_bound));
  row.emplace_back("discrepancy", format_bound(d));
  row.emplace_back("flag", d <= tol ? "ok" : "DISAGREE");
}

int cmd_table(const TableArgs& a, const Config& cfg, std::ostream& out) {
  const Format f = parse_format(cfg.format);
  std::vector<Row> rows;
  auto u = [](unsigned v) { return std::to_string(v); };
  bool disagree = false;
  if (a.target == "mzv-height-one") {
    if (a.max_weight < 2) throw UsageError("table mzv-height-one: --max-weight must be >= 2");
    for (unsigned w = 2; w <= a.max_weight; ++w)
      for (unsigned q = w; q >= 2; --q) {
        const unsigned j = w - q;
        const SeriesValue v = mzv_height_one(q, j, cfg.precision);
        rows.push_back({{"q", u(q)}, {"j", u(j)}, {"weight", u(w)}, {"value", v.value_string()},
                        {"error_bound", format_bound(v.error_bound)}, {"method", to_string(v.method)}});
      }
  } else if (a.target == "S-sums") {
    const auto ks = parse_range(a.k), ms = parse_range(a.m), ps = parse_range(a.p);
    for (unsigned k : ks)
      for (unsigned m : ms)
        for (unsigned p : ps)
          if (k == 0 || m == 0 || p < m + 1)
            throw domain_error("table S-sums: (k=" + u(k) + ", m=" + u(m) + ", p=" + u(p) +
                               ") violates k, m >= 1 and p >= m+1 (convergence condition)");
    for (unsigned k : ks)
      for (unsigned m : ms)
        for (unsigned p : ps) {
          Row row{{"k", u(k)}, {"m", u(m)}, {"p", u(p)}, {"N", std::to_string(cfg.N)}};
          add_comparison(row, s_closed(k, m - 1, p, cfg.precision), s_truncated({k, m, p}, cfg.N, cfg.precision),
                         cfg.margin);
          disagree |= row.back().second != "ok";
          rows.push_back(std::move(row));
        }
  } else if (a.target == "U-sums") {
    const auto ms = parse_range(a.m), rs = parse_range(a.r), ps = parse_range(a.p);
    for (unsigned m : ms)
      for (unsigned p : ps)
        if (m == 0 || p < 2)
          throw domain_error("table U-sums: (m=" + u(m) + ", p=" + u(p) + ") violates m >= 1 and p >= 2 (convergence)");
    for (unsigned m : ms)
      for (unsigned r : rs)
        for (unsigned p : ps) {
          Row row{{"m", u(m)}, {"r", u(r)}, {"p", u(p)}, {"N", std::to_string(cfg.N)}};
          add_comparison(row, u_closed(m, r, p, cfg.precision), u_truncated(m, r, p, cfg.N, cfg.precision),
                         cfg.margin);
          disagree |= row.back().second != "ok";
          rows.push_back(std::move(row));
        }
  } else {
    throw UsageError("unknown table '" + a.target + "' (expected S-sums, U-sums or mzv-height-one)");
  }
  emit_rows(rows, f, out);
  return disagree ? kExitVerificationFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler sums of generalized hyperharmonic numbers"};
  app.require_subcommand(1);
  Config cfg;

  if (const char* env = std::getenv("EULERSUM_PRECISION")) {
    try {
      cfg.precision = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: EULERSUM_PRECISION must be a positive integer\n";
      return kExitUsage;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "significant digits (default 50, env EULERSUM_PRECISION)");
    sub->add_option("--format", cfg.format, "table, json or csv");
  };

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "evaluate one quantity");
  compute->add_option("kind", ca.kind, "mhn|mhsn|hyperharmonic|gen-hh|stirling|bell|zeta|mzv|U|V|S")->required();
  compute->add_option("--n,--limit", ca.n, "upper limit n");
  compute->add_option("--m,--order", ca.m, "order m");
  compute->add_option("--k,--depth", ca.k, "depth k");
  compute->add_option("--p,--exponent", ca.p, "exponent p");
  compute->add_option("--r,--shift", ca.r, "shift r");
  compute->add_option("--N", ca.N, "truncation limit");
  compute->add_option("--s,--index", ca.s, "index such as 3,1,1");
  compute->add_option("--method", ca.method, "closed or truncated");
  compute->add_flag("--star", ca.star, "star variant");
  common(compute);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--suite", va.suite, "exact, numeric or all");
  verify->add_option("--seed", cfg.seed, "seed of the random weight generator");
  verify->add_option("--margin", cfg.margin, "multiple of the error bound allowed in numeric checks");
  verify->add_option("--out", va.out_path, "write the JSON report here");
  verify->add_option("--N", cfg.N, "truncation limit of the numeric checks");
  verify->add_option("--max-n", va.grid.n, "grid limit on n");
  verify->add_option("--max-depth", va.grid.depth, "grid limit on depth");
  verify->add_option("--max-r", va.grid.r, "grid limit on the shift r");
  verify->add_option("--partial-N", va.grid.partial_N, "limit of the exact partial-sum checks");
  verify->add_flag("--timings", va.timings, "record per-case timings in the report");
  common(verify);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "grid of values");
  table->add_option("target", ta.target, "S-sums, U-sums or mzv-height-one")->required();
  table->add_option("--k,--depth", ta.k, "range such as 1..3");
  table->add_option("--m,--order", ta.m, "range");
  table->add_option("--p,--exponent", ta.p, "range");
  table->add_option("--r,--shift", ta.r, "range");
  table->add_option("--max-weight", ta.max_weight, "maximal weight q + j");
  table->add_option("--N", cfg.N, "truncation limit");
  table->add_option("--margin", cfg.margin, "agreement margin");
  common(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    validate(cfg);
    if (compute->parsed()) return cmd_compute(ca, cfg, out);
    if (verify->parsed()) return cmd_verify(va, cfg, out, err);
    return cmd_table(ta, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eulersum
