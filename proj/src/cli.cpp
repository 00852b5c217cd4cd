#include "modhyp/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "modhyp/charsums.hpp"

namespace modhyp::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* format_name(Format f) {
  switch (f) {
    case Format::csv: return "csv";
    case Format::text: return "text";
    case Format::json: break;
  }
  return "json";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw Error(ErrorKind::precondition, "unknown output format '" + s + "'");
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["p"] = c.p ? nlohmann::json(*c.p) : nlohmann::json(nullptr);
  j["from"] = c.from;
  j["to"] = c.to;
  j["c"] = c.c;
  j["h_set"] = c.h_set;
  j["k_set"] = c.k_set;
  j["h_max"] = c.h_max ? nlohmann::json(*c.h_max) : nlohmann::json(nullptr);
  j["k_max"] = c.k_max ? nlohmann::json(*c.k_max) : nlohmann::json(nullptr);
  j["bound"] = c.bound;
  j["L"] = c.L;
  j["eps"] = c.eps;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["k"] = c.k;
  j["rule"] = c.rule;
  j["task"] = c.task;
  j["poly"] = c.poly;
  j["lo"] = c.lo;
  j["hi"] = c.hi;
  j["set"] = c.set;
  j["A"] = c.A;
  j["Z0"] = c.Z0;
  j["Z1"] = c.Z1;
  j["spec"] = c.spec;
  j["density"] = c.density ? nlohmann::json(*c.density) : nlohmann::json(nullptr);
  j["format"] = format_name(c.format);
  j["workers"] = c.workers;
  j["seed"] = c.seed;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  auto opt = [&](const char* key, std::optional<std::uint64_t>& out) {
    if (j.contains(key) && !j[key].is_null()) out = j[key].get<std::uint64_t>();
  };
  c.command = j.at("command").get<std::string>();
  opt("p", c.p);
  c.from = j.value("from", c.from);
  c.to = j.value("to", c.to);
  c.c = j.value("c", c.c);
  c.h_set = j.value("h_set", c.h_set);
  c.k_set = j.value("k_set", c.k_set);
  opt("h_max", c.h_max);
  opt("k_max", c.k_max);
  c.bound = j.value("bound", c.bound);
  c.L = j.value("L", c.L);
  c.eps = j.value("eps", c.eps);
  c.alpha = j.value("alpha", c.alpha);
  c.beta = j.value("beta", c.beta);
  c.k = j.value("k", c.k);
  c.rule = j.value("rule", c.rule);
  c.task = j.value("task", c.task);
  c.poly = j.value("poly", c.poly);
  c.lo = j.value("lo", c.lo);
  c.hi = j.value("hi", c.hi);
  c.set = j.value("set", c.set);
  c.A = j.value("A", c.A);
  c.Z0 = j.value("Z0", c.Z0);
  c.Z1 = j.value("Z1", c.Z1);
  c.spec = j.value("spec", c.spec);
  opt("density", c.density);
  c.format = parse_format(j.value("format", std::string("json")));
  c.workers = j.value("workers", c.workers);
  c.seed = j.value("seed", c.seed);
  return c;
}

namespace {

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Re-checks a witness with plain integer arithmetic, independent of the library.
void self_check(std::uint64_t p, std::uint64_t c, std::uint64_t h, std::uint64_t k, std::uint64_t x, std::uint64_t y) {
  using u128 = unsigned __int128;
  const bool first = static_cast<u128>(x) * y % p == c % p;
  const bool second = static_cast<u128>((x + h) % p) * ((y + k) % p) % p == c % p;
  if (!first || !second) throw VerificationError("witness failed independent re-check");
}

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void emit(const ordered_json& record) {
    switch (format_) {
      case Format::json: out_ << record.dump() << '\n'; break;
      case Format::csv: emit_csv(record); break;
      case Format::text: emit_text(record); break;
    }
  }

  void raw_text(const std::string& line) { out_ << line << '\n'; }

  Format format() const noexcept { return format_; }

 private:
  static std::string scalar(const ordered_json& v, char list_sep) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += list_sep;
        s += scalar(v[i], list_sep);
      }
      return s;
    }
    return v.dump();
  }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  }

  void emit_csv(const ordered_json& record) {
    if (!header_written_) {
      std::string header;
      for (auto it = record.begin(); it != record.end(); ++it) {
        if (!header.empty()) header += ',';
        header += it.key();
      }
      out_ << header << '\n';
      header_written_ = true;
    }
    std::string line;
    bool first = true;
    for (const auto& v : record) {
      if (!first) line += ',';
      first = false;
      line += csv_field(scalar(v, ';'));
    }
    out_ << line << '\n';
  }

  void emit_text(const ordered_json& record) {
    std::string line;
    for (auto it = record.begin(); it != record.end(); ++it) {
      if (!line.empty()) line += ' ';
      line += it.key() + '=' + (it.value().is_null() ? std::string("-") : scalar(it.value(), ','));
    }
    out_ << line << '\n';
  }

  std::ostream& out_;
  Format format_;
  bool header_written_ = false;
};

PrimeModulus require_p(const RunConfig& config) {
  if (!config.p) throw Error(ErrorKind::invalid_prime, "--p is required");
  return PrimeModulus(*config.p);
}

ordered_json optional_uint(const std::optional<std::uint64_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

void put_witness(ordered_json& rec, const HyperbolaParams& params, const std::optional<PairWitness>& w) {
  if (w) {
    self_check(params.modulus(), params.c().value, w->h.value, w->k.value, w->first.x.value, w->first.y.value);
    rec["h"] = w->h.value;
    rec["k"] = w->k.value;
    rec["x"] = w->first.x.value;
    rec["y"] = w->first.y.value;
  } else {
    rec["h"] = nullptr;
    rec["k"] = nullptr;
    rec["x"] = nullptr;
    rec["y"] = nullptr;
  }
}

double parse_eps(const RunConfig& config) { return parse_rational(config.eps).convert_to<double>(); }

void cmd_minimal(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const auto h_set = DistanceSetSpec::parse(config.h_set);
  const auto k_set = DistanceSetSpec::parse(config.k_set);
  for (auto c : select_c(CSelection::parse(config.c), p.value(), config.seed)) {
    const HyperbolaParams params(p, c);
    const PairConstraint constraint{h_set, k_set, config.h_max.value_or(p.value() - 1),
                                    config.k_max.value_or(p.value() - 1)};
    const auto report = minimal_positive_offset(params, constraint);
    ordered_json rec;
    rec["p"] = p.value();
    rec["c"] = params.c().value;
    rec["minimal_H"] = optional_uint(report.minimal_H);
    put_witness(rec, params, report.found);
    em.emit(rec);
  }
}

void cmd_pairs(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const auto h_set = DistanceSetSpec::parse(config.h_set);
  const auto k_set = DistanceSetSpec::parse(config.k_set);
  const std::uint64_t top = p.value() - 1;

  std::uint64_t h_max = top, k_max = top;
  if (config.bound == "smooth" || config.bound == "squarefree") {
    const auto s = config.bound == "smooth" ? smooth_schedule(p.value(), parse_eps(config))
                                            : squarefree_schedule(p.value(), parse_eps(config));
    h_max = static_cast<std::uint64_t>(std::min<double>(std::floor(s.H), static_cast<double>(top)));
    k_max = static_cast<std::uint64_t>(std::min<double>(std::floor(s.K), static_cast<double>(top)));
  } else if (config.bound != "none" && config.bound != "dense") {
    throw Error(ErrorKind::precondition, "unknown bound schedule '" + config.bound + "'");
  }
  h_max = std::min(config.h_max.value_or(h_max), top);
  k_max = std::min(config.k_max.value_or(k_max), top);

  for (auto c : select_c(CSelection::parse(config.c), p.value(), config.seed)) {
    const HyperbolaParams params(p, c);
    const SearchReport report = config.bound == "dense"
                                    ? widening_search(params, h_set, k_set, almost_dense_bound(p.value(), parse_eps(config)))
                                    : restricted_pair_search(params, {h_set, k_set, h_max, k_max});
    ordered_json rec;
    rec["p"] = p.value();
    rec["c"] = params.c().value;
    rec["h_set"] = h_set.to_string();
    rec["k_set"] = k_set.to_string();
    rec["h_max"] = std::min(report.constraint.h_max, top);
    rec["k_max"] = std::min(report.constraint.k_max, top);
    rec["found"] = report.found.has_value();
    put_witness(rec, params, report.found);
    rec["symbol"] = report.found ? ordered_json(report.symbol) : ordered_json(nullptr);
    rec["tested_pairs"] = report.tested_pairs;
    em.emit(rec);
  }
}

ordered_json theorem1_record(std::uint64_t p, std::uint64_t L, const std::optional<Theorem1Witness>& w) {
  ordered_json rec;
  rec["p"] = p;
  rec["L"] = L;
  rec["c"] = w ? ordered_json(w->c.value) : ordered_json(nullptr);
  rec["verified"] = w ? w->verified : false;
  return rec;
}

void cmd_theorem1(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  em.emit(theorem1_record(p.value(), config.L, theorem1_witness_search(p, config.L)));
}

void cmd_sigma(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  ordered_json rec;
  rec["p"] = p.value();
  rec["L"] = config.L;
  rec["count"] = sigma_count(p, config.L, config.workers);
  em.emit(rec);
}

void cmd_np(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const std::uint64_t n = least_nonresidue(p);
  if (em.format() == Format::text) {
    em.raw_text(std::to_string(n));
    return;
  }
  ordered_json rec;
  rec["p"] = p.value();
  rec["np"] = n;
  em.emit(rec);
}

void cmd_charsum(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const PolyModP f(p, config.poly);
  const auto r = complete_char_sum(f, config.workers);
  if (r.weil_applicable && !r.within_bound()) throw VerificationError("character sum exceeds the Weil bound");
  ordered_json rec;
  rec["p"] = p.value();
  rec["poly"] = f.coefficients();
  rec["value"] = r.value;
  rec["m"] = r.distinct_roots_m;
  rec["weil_bound"] = r.weil_bound;
  rec["weil_applicable"] = r.weil_applicable;
  rec["within_bound"] = r.within_bound();
  em.emit(rec);
}

void cmd_doublesum(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const auto r = double_sum(p, config.lo, config.hi, config.set, config.workers);
  ordered_json rec;
  rec["p"] = p.value();
  rec["lo"] = config.lo;
  rec["hi"] = config.hi;
  rec["interval_size"] = r.interval_size;
  rec["set_size"] = r.set_size;
  rec["value"] = r.value;
  rec["trivial_bound"] = r.trivial_bound;
  rec["inner"] = r.inner;
  em.emit(rec);
}

void cmd_triplesum(const RunConfig& config, Emitter& em) {
  const PrimeModulus p = require_p(config);
  const TripleSumConfig tc{HyperbolaParams(p, std::stoll(config.c)), config.A, config.Z0, config.Z1};
  const auto w = weight_w(tc);
  const std::int64_t S = triple_sum_S(tc);
  const std::uint64_t W = second_moment_W(tc);

  std::uint64_t sum_w = 0, sum_w2 = 0;
  std::int64_t regrouped = 0;
  for (const auto& [n, count] : w) {
    sum_w += count;
    sum_w2 += count * count;
    std::int64_t inner = 0;
    for (auto z0 : tc.Z0) inner += legendre(static_cast<std::int64_t>(z0 % p.value()) - static_cast<std::int64_t>(n), p);
    regrouped += static_cast<std::int64_t>(count) * inner;
  }
  if (sum_w != tc.A.size() * tc.Z1.size() || sum_w2 != W || regrouped != S) {
    throw VerificationError("weight identities failed");
  }
  ordered_json rec;
  rec["p"] = p.value();
  rec["c"] = tc.params.c().value;
  rec["size_A"] = tc.A.size();
  rec["size_Z0"] = tc.Z0.size();
  rec["size_Z1"] = tc.Z1.size();
  rec["S"] = S;
  rec["W"] = W;
  rec["sum_w"] = sum_w;
  em.emit(rec);
}

void cmd_scan(const RunConfig& config, Emitter& em) {
  ScanOptions opts;
  opts.L = config.L;
  opts.c = CSelection::parse(config.c);
  opts.h_set = DistanceSetSpec::parse(config.h_set);
  opts.k_set = DistanceSetSpec::parse(config.k_set);
  opts.seed = config.seed;
  opts.workers = config.workers;

  ScanTask task;
  if (config.task == "minimal") task = ScanTask::minimal_offset;
  else if (config.task == "theorem1") task = ScanTask::theorem1;
  else if (config.task == "np") task = ScanTask::least_nonresidue;
  else throw Error(ErrorKind::precondition, "unknown scan task '" + config.task + "'");

  scan_primes(config.from, config.to, task, opts, [&](const ScanRow& row) {
    ordered_json rec;
    rec["p"] = row.p;
    switch (task) {
      case ScanTask::least_nonresidue:
        rec["np"] = row.error.empty() ? ordered_json(row.least_nonresidue) : ordered_json(nullptr);
        break;
      case ScanTask::theorem1: {
        auto t = theorem1_record(row.p, config.L, row.witness);
        rec["L"] = t["L"];
        rec["c"] = t["c"];
        rec["verified"] = t["verified"];
        break;
      }
      case ScanTask::minimal_offset: {
        const SearchReport* worst = nullptr;
        std::uint64_t found = 0;
        for (const auto& r : row.reports) {
          if (!r.minimal_H) continue;
          ++found;
          if (!worst || *r.minimal_H > *worst->minimal_H) worst = &r;
        }
        rec["c_count"] = row.reports.size();
        rec["found_count"] = found;
        rec["max_minimal_H"] = worst ? ordered_json(*worst->minimal_H) : ordered_json(nullptr);
        rec["c"] = worst ? ordered_json(worst->params.c().value) : ordered_json(nullptr);
        if (worst) put_witness(rec, worst->params, worst->found);
        else put_witness(rec, HyperbolaParams(PrimeModulus(row.p), 1), std::nullopt);
        break;
      }
    }
    rec["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
    em.emit(rec);
  });
}

void cmd_sets(const RunConfig& config, Emitter& em) {
  const auto spec = DistanceSetSpec::parse(config.spec);
  ordered_json rec;
  rec["spec"] = spec.to_string();
  if (config.density) {
    const auto d = density_report(spec, *config.density);
    rec["X"] = d.X;
    rec["count"] = d.count;
    rec["ratio"] = std::to_string(d.ratio_num) + "/" + std::to_string(d.ratio_den);
    rec["dyadic_count"] = d.dyadic_count;
  } else {
    const auto m = members(spec, config.lo, config.hi);
    rec["lo"] = config.lo;
    rec["hi"] = config.hi;
    rec["count"] = m.size();
    rec["members"] = m;
  }
  em.emit(rec);
}

void cmd_exponents(const RunConfig& config, Emitter& em) {
  ExponentRule rule;
  if (config.rule == "chang") rule = ExponentRule::chang;
  else if (config.rule == "karatsuba") rule = ExponentRule::karatsuba;
  else throw Error(ErrorKind::precondition, "unknown rule '" + config.rule + "'");
  const Rational alpha = parse_rational(config.alpha);
  const Rational beta = parse_rational(config.beta);
  const Rational eps = parse_rational(config.eps);
  const auto r = exponent_condition(alpha, beta, config.k, eps, rule);
  ordered_json rec;
  rec["rule"] = config.rule;
  rec["alpha"] = format_rational(alpha);
  rec["beta"] = format_rational(beta);
  rec["k"] = config.k;
  rec["eps"] = format_rational(eps);
  rec["lhs"] = format_rational(r.lhs);
  rec["rhs"] = format_rational(r.rhs);
  rec["range_ok"] = r.range_ok;
  rec["holds"] = r.holds;
  em.emit(rec);
}

const char* diagnostic_prefix(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_prime: return "invalid prime";
    case ErrorKind::invalid_residue: return "invalid c";
    case ErrorKind::bad_set_spec: return "bad set spec";
    case ErrorKind::not_invertible: return "not invertible";
    case ErrorKind::budget_exceeded: return "budget exceeded";
    case ErrorKind::verification: return "verification failure";
    case ErrorKind::precondition: break;
  }
  return "invalid argument";
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Emitter em(out, config.format);
  try {
    const std::string& cmd = config.command;
    if (cmd == "minimal-h") cmd_minimal(config, em);
    else if (cmd == "pairs") cmd_pairs(config, em);
    else if (cmd == "theorem1") cmd_theorem1(config, em);
    else if (cmd == "sigma") cmd_sigma(config, em);
    else if (cmd == "np") cmd_np(config, em);
    else if (cmd == "charsum") cmd_charsum(config, em);
    else if (cmd == "doublesum") cmd_doublesum(config, em);
    else if (cmd == "triplesum") cmd_triplesum(config, em);
    else if (cmd == "scan") cmd_scan(config, em);
    else if (cmd == "sets") cmd_sets(config, em);
    else if (cmd == "check-exponents") cmd_exponents(config, em);
    else {
      err << "error: unknown command '" << cmd << "'\n";
      return kBadArguments;
    }
  } catch (const VerificationError& e) {
    err << "error: verification failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << diagnostic_prefix(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::verification ? kVerificationFailure : kBadArguments;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid argument: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternal;
  }
  out.flush();
  return kOk;
}

namespace {

constexpr const char* kFormatHelp =
    "Output format: json (one record per line), csv (header + rows, fixed columns), text (key=value)";


}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  RunConfig cfg;
  std::string format = "json";
  CLI::App app{"Modular hyperbola experiments: pairs of points on xy = c (mod p) and the character sums behind them"};
  app.require_subcommand(1);

  auto add_p = [&](CLI::App* s) { s->add_option("--p", cfg.p, "Odd prime modulus")->required(); };
  auto add_c = [&](CLI::App* s) { s->add_option("--c", cfg.c, "c: an integer, 'all', or 'sample:N'"); };
  auto add_sets = [&](CLI::App* s) {
    const char* help = "all | primes | squarefree | smooth:Y | multclosed:a,b,... | semiprime2 | explicit:a,b,...";
    s->add_option("--h-set", cfg.h_set, help);
    s->add_option("--k-set", cfg.k_set, help);
  };
  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Seed for --c sample:N"); };
  auto add_workers = [&](CLI::App* s) { s->add_option("--workers", cfg.workers, "OpenMP threads (0 = default)"); };

  auto* minimal = app.add_subcommand("minimal-h", "Least H with a pair at positive offsets h, k <= H.\n"
                                                  "Columns: p,c,minimal_H,h,k,x,y");
  add_p(minimal);
  add_c(minimal);
  add_sets(minimal);
  add_seed(minimal);
  minimal->add_option("--h-max", cfg.h_max);
  minimal->add_option("--k-max", cfg.k_max);

  auto* pairs = app.add_subcommand("pairs", "Restricted-distance pair search (k outer, h inner).\n"
                                            "Columns: p,c,h_set,k_set,h_max,k_max,found,h,k,x,y,symbol,tested_pairs");
  add_p(pairs);
  add_c(pairs);
  add_sets(pairs);
  add_seed(pairs);
  pairs->add_option("--h-max", cfg.h_max);
  pairs->add_option("--k-max", cfg.k_max);
  pairs->add_option("--bound", cfg.bound, "none | smooth | squarefree | dense (doubling from p^(11/34+eps))")
      ->check(CLI::IsMember({"none", "smooth", "squarefree", "dense"}));
  pairs->add_option("--eps", cfg.eps, "Epsilon for --bound");

  auto* theorem1 = app.add_subcommand("theorem1", "Smallest c whose 2L symbols (l -+ 4c / p) are all -1.\n"
                                                  "Columns: p,L,c,verified");
  add_p(theorem1);
  theorem1->add_option("--L", cfg.L, "Run length L");

  auto* sigma = app.add_subcommand("sigma", "Count of c satisfying the run condition.\nColumns: p,L,count");
  add_p(sigma);
  sigma->add_option("--L", cfg.L, "Run length L");
  add_workers(sigma);

  auto* np = app.add_subcommand("np", "Least quadratic non-residue.\nColumns: p,np");
  add_p(np);

  auto* charsum = app.add_subcommand("charsum", "Complete character sum of a polynomial with its Weil bound.\n"
                                                "Columns: p,poly,value,m,weil_bound,weil_applicable,within_bound");
  add_p(charsum);
  charsum->add_option("--poly", cfg.poly, "Coefficients c0,c1,... (low to high)")->delimiter(',')->required();
  add_workers(charsum);

  auto* doublesum = app.add_subcommand("doublesum", "sum_{x in [lo,hi]} |sum_{y in S} (y + x / p)|.\n"
                                                    "Columns: p,lo,hi,interval_size,set_size,value,trivial_bound,inner");
  add_p(doublesum);
  doublesum->add_option("--lo", cfg.lo)->required();
  doublesum->add_option("--hi", cfg.hi)->required();
  doublesum->add_option("--set", cfg.set, "S as a,b,...")->delimiter(',')->required();
  add_workers(doublesum);

  auto* triplesum = app.add_subcommand("triplesum", "Triple sum S, weights w(n) and second moment W.\n"
                                                    "Columns: p,c,size_A,size_Z0,size_Z1,S,W,sum_w");
  add_p(triplesum);
  triplesum->add_option("--c", cfg.c)->required();
  triplesum->add_option("--A", cfg.A)->delimiter(',')->required();
  triplesum->add_option("--Z0", cfg.Z0)->delimiter(',')->required();
  triplesum->add_option("--Z1", cfg.Z1)->delimiter(',')->required();

  auto* scan = app.add_subcommand("scan", "Scan primes in [from, to] in parallel; rows in ascending p.\n"
                                          "Columns (minimal): p,c_count,found_count,max_minimal_H,c,h,k,x,y,error\n"
                                          "Columns (theorem1): p,L,c,verified,error\n"
                                          "Columns (np): p,np,error");
  scan->add_option("--task", cfg.task)->required()->check(CLI::IsMember({"minimal", "theorem1", "np"}));
  scan->add_option("--from", cfg.from)->required();
  scan->add_option("--to", cfg.to)->required();
  scan->add_option("--L", cfg.L);
  add_c(scan);
  add_sets(scan);
  add_seed(scan);
  add_workers(scan);

  auto* sets = app.add_subcommand("sets", "Members of a distance set, or its density with --density X.\n"
                                          "Columns: spec,lo,hi,count,members | spec,X,count,ratio,dyadic_count");
  sets->add_option("--spec", cfg.spec)->required();
  sets->add_option("--lo", cfg.lo);
  sets->add_option("--hi", cfg.hi);
  sets->add_option("--density", cfg.density);

  auto* exps = app.add_subcommand("check-exponents", "Exact check of the double-sum exponent conditions.\n"
                                                     "Columns: rule,alpha,beta,k,eps,lhs,rhs,range_ok,holds");
  exps->add_option("--alpha", cfg.alpha, "Rational, e.g. 11/34+1e-6")->required();
  exps->add_option("--beta", cfg.beta)->required();
  exps->add_option("--k", cfg.k);
  exps->add_option("--eps", cfg.eps);
  exps->add_option("--rule", cfg.rule)->check(CLI::IsMember({"chang", "karatsuba"}));

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--format", format, kFormatHelp)->check(CLI::IsMember({"json", "csv", "text"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err) == 0 ? kOk : kBadArguments;
    return std::nullopt;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  cfg.format = parse_format(format);
  exit_code = kOk;
  return cfg;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto config = parse_args(argc, argv, out, err, code);
  if (!config) return code;
  return run(*config, out, err);
}

}  // namespace modhyp::cli
