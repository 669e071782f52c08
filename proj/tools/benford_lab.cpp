// benford_lab: command-line driver for the digit-statistics experiments.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "benford/bignat.hpp"
#include "benford/collatz.hpp"
#include "benford/equidist.hpp"
#include "benford/experiments.hpp"
#include "benford/highprec.hpp"
#include "benford/mantissa.hpp"
#include "benford/parallel.hpp"
#include "benford/report.hpp"
#include "benford/rmt.hpp"
#include "benford/stats.hpp"
#include "benford/zeta.hpp"

using namespace benford;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitConfig = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned base = 10;
  std::uint64_t seed = 1;
  int workers = 0;
  std::string out = "-";
  std::string format = "table";
  std::string preset;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw ConfigError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Json meta_for(const std::string& command, const Common& c) {
  // Worker count is left out on purpose: it never changes results.
  return {{"command", command}, {"preset", c.preset}, {"seed", c.seed}, {"base", c.base}, {"format", c.format}};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

void emit_test_report(const std::string& command, const Common& c, Json meta, const TestReport& report,
                      Json extra = Json::object()) {
  Output out(c.out);
  auto& os = out.stream();
  for (auto& [k, v] : extra.items()) meta[k] = v;
  if (c.format == "json") {
    os << Json{{"meta", meta}, {"report", to_json(report)}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << csv_metadata_line(meta);
    write_csv(os, report);
  } else {
    os << command << '\n';
    for (auto& [k, v] : extra.items()) os << "  " << k << " = " << v.dump() << '\n';
    write_table(os, report);
  }
}

// ---------------------------------------------------------------- digits

struct DecimalValue {
  BigNat numerator;
  BigNat denominator;
};

// Accepts [+-]digits[.digits][(e|E)[+-]digits]; returns nullopt for zero.
std::optional<DecimalValue> parse_decimal(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::string digits;
  std::int64_t exponent = 0;
  bool seen_digit = false;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    digits += s[i];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    for (++i; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
      digits += s[i];
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("not a number");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::size_t used = 0;
    const std::string tail = s.substr(i);
    if (tail.empty() || !(std::isdigit(static_cast<unsigned char>(tail[0])) || tail[0] == '+' || tail[0] == '-')) {
      throw std::invalid_argument("bad exponent");
    }
    const long long e = std::stoll(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing characters");
    if (e > 100000 || e < -100000) throw std::invalid_argument("exponent out of range");
    exponent += e;
    i = s.size();
  }
  if (i != s.size()) throw std::invalid_argument("trailing characters");

  BigNat n = BigNat::from_decimal(digits);
  if (n.is_zero()) return std::nullopt;
  if (exponent >= 0) return DecimalValue{n * BigNat::pow(10, static_cast<std::uint64_t>(exponent)), BigNat(1)};
  return DecimalValue{n, BigNat::pow(10, static_cast<std::uint64_t>(-exponent))};
}

int cmd_digits(const Common& c, const std::string& input) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw ConfigError("cannot open input file " + input);
    in = &file;
  }
  const LeadingDigitExtractor extract(c.base);
  DigitHistogram hist(c.base);
  std::uint64_t zeros = 0;
  std::uint64_t line_no = 0;
  std::string line;
  while (std::getline(*in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::optional<DecimalValue> v;
    try {
      v = parse_decimal(line);
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": malformed number '" + line + "' (" + e.what() + ")");
    }
    if (!v) {
      ++zeros;
      continue;
    }
    if (v->denominator == BigNat(1)) {
      hist.add(extract(v->numerator));
    } else {
      hist.add(ratio_leading_digit(v->denominator, v->numerator, 0, c.base));
    }
  }
  if (hist.total() == 0) throw ConfigError("usage: no numbers in input");
  emit_test_report("digits", c, meta_for("digits", c), z_statistics(hist), {{"zeros_skipped", zeros}});
  return kExitOk;
}

// ---------------------------------------------------------------- collatz

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad integer list '" + s + "'");
    }
  }
  return out;
}

struct CollatzOpts {
  std::string x0;
  std::size_t digits = 100000;
  std::string mode = "remove2";
  std::uint64_t max_iters = 10'000'000;
  std::string ktuple = "1,1";
  std::uint64_t T = 100000;
  std::uint64_t max_m = 3;
  std::uint64_t max_sum = 12;
  std::string start = "419753999998525";
  std::uint64_t stride = 6;
  std::uint64_t count = 100000;
  std::size_t m = 10;
  std::uint64_t samples = 100000;
  std::uint64_t d = 2;
  std::uint64_t g = 3;
  std::string h = "0,1";
};

BigNat parse_bignat(const std::string& s, const std::string& what) {
  try {
    return BigNat::from_decimal(s);
  } catch (const std::exception&) {
    throw ConfigError("bad " + what + " '" + s + "'");
  }
}

DghMap parse_map(const CollatzOpts& o) {
  std::vector<std::int64_t> h;
  std::stringstream ss(o.h);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      h.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ConfigError("bad h table '" + o.h + "'");
    }
  }
  try {
    return DghMap(o.d, o.g, h);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int cmd_collatz_experiment(Common c, const CollatzOpts& o) {
  IterationMode mode = IterationMode::remove_all_twos;
  if (c.preset == "paper-bignum-remove2") {
    mode = IterationMode::remove_all_twos;
  } else if (c.preset == "paper-bignum-single") {
    mode = IterationMode::single_step;
  } else if (!c.preset.empty()) {
    throw ConfigError("unknown preset '" + c.preset + "' for collatz experiment");
  } else if (o.mode == "single") {
    mode = IterationMode::single_step;
  } else {
    require(o.mode == "remove2", "mode must be remove2 or single");
  }
  require(o.digits >= 1 && o.digits <= 10'000'000, "digits must lie in [1, 1e7]");
  Json meta = meta_for("collatz experiment", c);
  meta["mode"] = mode == IterationMode::single_step ? "single" : "remove2";
  DigitExperiment result{DigitHistogram(c.base), 0, false};
  if (!o.x0.empty()) {
    const BigNat x0 = parse_bignat(o.x0, "seed value");
    require(!(x0 < BigNat(2)), "x0 must be >= 2");
    meta["x0_digits"] = x0.to_decimal().size();
    result = iterate_digit_experiment(x0, mode, c.base, o.max_iters);
  } else {
    BigSeedConfig config = bignum_config(mode, c.seed);
    config.digits = o.digits;
    config.base = c.base;
    meta["digits"] = config.digits;
    result = big_seed_experiment(config);
  }
  const TestReport report = z_statistics(result.histogram);
  emit_test_report("collatz experiment", c, meta, report,
                   {{"iterates", result.iterates}, {"reached_one", result.reached_one}});
  return kExitOk;
}

int cmd_collatz_structure(const Common& c, const CollatzOpts& o) {
  std::vector<std::vector<std::uint64_t>> tuples;
  std::vector<StructureRow> rows;
  bool failed = false;
  std::string failure;
  try {
    if (c.preset == "structure") {
      rows = structure_sweep(o.max_m, o.max_sum);
    } else {
      require(c.preset.empty(), "unknown preset '" + c.preset + "' for collatz structure");
      const auto k = parse_list(o.ktuple);
      require(!k.empty(), "empty k-tuple");
      for (auto v : k) require(v >= 1, "k-values must be >= 1");
      std::uint64_t sum = 0;
      for (auto v : k) sum += v;
      require(sum <= 30, "k-sum must be <= 30");
      require(o.T >= 2 * (std::uint64_t{6} << sum), "T must be at least two periods 12 * 2^sum");
      StructureRow row;
      row.ktuple = k;
      row.scan = inverse_path_bruteforce(k, o.T);
      row.probability = path_probability_check(k, o.T);
      const double p = row.probability.predicted;
      row.sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(row.probability.domain_size));
      rows.push_back(row);
    }
  } catch (const StructureFailure& e) {
    failed = true;
    failure = e.what();
  }
  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("collatz structure", c);
  auto row_json = [](const StructureRow& r) {
    return Json{{"k", r.ktuple},
                {"modulus", r.scan.prediction.modulus.to_decimal()},
                {"residues",
                 {r.scan.prediction.residues->first.to_decimal(), r.scan.prediction.residues->second.to_decimal()}},
                {"matches", r.scan.matches},
                {"domain_size", r.scan.domain_size},
                {"empirical", r.probability.empirical},
                {"predicted", r.probability.predicted},
                {"sigma", r.sigma}};
  };
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    os << Json{{"meta", meta}, {"rows", arr}, {"failure", failure}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << csv_metadata_line(meta) << "k,modulus,residue1,residue2,matches,domain_size,empirical,predicted,sigma\n";
    for (const auto& r : rows) {
      std::string k;
      for (auto v : r.ktuple) k += (k.empty() ? "" : " ") + std::to_string(v);
      os << k << ',' << r.scan.prediction.modulus.to_decimal() << ','
         << r.scan.prediction.residues->first.to_decimal() << ','
         << r.scan.prediction.residues->second.to_decimal() << ',' << r.scan.matches << ','
         << r.scan.domain_size << ',' << fmt_double(r.probability.empirical) << ','
         << fmt_double(r.probability.predicted) << ',' << fmt_double(r.sigma) << '\n';
    }
  } else {
    for (const auto& r : rows) os << row_json(r).dump() << '\n';
    os << rows.size() << " k-tuples checked\n";
  }
  if (failed) {
    std::cerr << "structure check failed: " << failure << '\n';
    return kExitAssertion;
  }
  return kExitOk;
}

int cmd_collatz_kvalues(const Common& c, const CollatzOpts& o) {
  const DghMap map = parse_map(o);
  require(o.count >= 1, "count must be >= 1");
  const SeedRange seeds{parse_bignat(o.start, "start"), o.stride, o.count};
  require(map.in_domain(seeds.start), "start is outside the domain of the map");
  KValueStats stats = kvalue_histogram(map, seeds, o.m);
  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("collatz kvalues", c);
  meta["start"] = o.start;
  meta["stride"] = o.stride;
  meta["count"] = o.count;
  meta["m"] = o.m;
  meta["map"] = {{"d", map.d()}, {"g", map.g()}, {"h", map.h_table()}};
  const double d = static_cast<double>(map.d());
  if (c.format == "json") {
    os << Json{{"meta", meta}, {"stats", to_json(stats)}}.dump(2) << '\n';
  } else {
    if (c.format == "csv") os << csv_metadata_line(meta);
    os << "k,count,frequency,predicted\n";
    for (std::size_t n = 1; n < stats.counts.size(); ++n) {
      os << n << ',' << stats.counts[n] << ',' << fmt_double(stats.frequency(n)) << ','
         << fmt_double((d - 1.0) * std::pow(d, -static_cast<double>(n))) << '\n';
    }
    if (c.format == "table") os << "mean = " << stats.mean << ", variance = " << stats.variance << '\n';
  }
  return kExitOk;
}

int cmd_collatz_ratio(Common c, const CollatzOpts& o) {
  RatioTableConfig config;
  if (c.preset.rfind("paper-table-base", 0) == 0) {
    const std::string b = c.preset.substr(16);
    require(b == "4" || b == "8" || b == "10" || b == "16", "unknown preset '" + c.preset + "'");
    c.base = static_cast<unsigned>(std::stoul(b));
    config = table_ratio_config(c.base);
  } else {
    require(c.preset.empty(), "unknown preset '" + c.preset + "' for collatz ratio");
    config.start = parse_bignat(o.start, "start");
    config.stride = o.stride;
    config.count = o.count;
    config.m = o.m;
    config.base = c.base;
  }
  require(config.count >= 1, "count must be >= 1");
  require(config.stride % 6 == 0, "stride must be a multiple of 6 to stay in one residue class");
  require(DghMap::collatz().in_domain(config.start), "start must be odd and prime to 3");
  config.workers = c.workers;
  const RatioTable table = ratio_table(config);
  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("collatz ratio", c);
  if (c.format == "json") {
    os << Json{{"meta", meta}, {"table", to_json(table)}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    os << csv_metadata_line(meta);
    write_ratio_csv(os, table);
  } else {
    write_ratio_table(os, table);
  }
  return kExitOk;
}

int cmd_collatz_model(const Common& c, const CollatzOpts& o) {
  require(o.samples >= 1, "samples must be >= 1");
  ModelConfig config{o.m, c.base, o.samples, c.seed, c.workers};
  const DigitHistogram hist = geometric_model_histogram(config);
  Json meta = meta_for("collatz model", c);
  meta["m"] = o.m;
  meta["samples"] = o.samples;
  emit_test_report("collatz model", c, meta, z_statistics(hist));
  return kExitOk;
}

// ---------------------------------------------------------------- zeta

struct ZetaOpts {
  double t_start = 0.0;
  double t_end = 100.0;
  double step = 0.25;
  double sigma = 0.5;
  double delta = -1.0;  // < 0: fixed sigma
  double kappa = 2.5;
  double aleph = 1.0;
};

int cmd_zeta(Common c, const ZetaOpts& o) {
  ZetaScanConfig config;
  if (c.preset == "figure1") {
    config = figure1_config();
    c.base = config.base;
  } else {
    require(c.preset.empty(), "unknown preset '" + c.preset + "' for zeta");
    require(o.step > 0.0, "step must be > 0");
    require(o.t_end >= o.t_start, "t-end must be >= t-start");
    require(o.t_start >= -1e5 && o.t_end <= 1e5, "t must lie in [-1e5, 1e5]");
    config.t_start = o.t_start;
    config.t_end = o.t_end;
    config.step = o.step;
    if (o.delta >= 0.0) {
      require(o.delta > 0.0 && o.delta < 1.0, "delta must lie in (0, 1)");
      require(o.t_start > std::exp(1.0), "near-critical scans need t-start > e");
      config.mode = SigmaMode::near_critical(o.delta);
    } else {
      require(o.sigma >= 0.0, "sigma must be >= 0");
      require(!(o.sigma == 1.0 && o.t_start <= 0.0 && o.t_end >= 0.0), "the scan would hit the pole s = 1");
      config.mode = SigmaMode::fixed_at(o.sigma);
    }
    config.base = c.base;
  }
  require(config.base >= 2, "base must be >= 2");
  config.workers = c.workers;
  const ZetaScan scan = zeta_scan(config);

  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("zeta", c);
  meta["t_start"] = config.t_start;
  meta["t_end"] = config.t_end;
  meta["step"] = config.step;
  if (config.mode.kind == SigmaMode::Kind::fixed) {
    meta["sigma"] = config.mode.sigma;
  } else {
    const HejhalParams params{config.mode.delta, o.kappa, o.aleph};
    meta["delta"] = params.delta;
    meta["kappa"] = params.kappa;
    meta["aleph"] = params.aleph;
    meta["psi_at_t_end"] = params.psi_of_T(config.t_end);
  }
  Json counts{{"points", scan.samples.size()},
              {"near_zero", scan.near_zero},
              {"ambiguous", scan.ambiguous},
              {"failures", scan.failures},
              {"tv_to_benford", tv_distance_to_benford(scan.histogram)}};
  if (c.format == "csv") {
    meta["summary"] = counts;
    os << csv_metadata_line(meta);
    write_zeta_csv(os, scan);
  } else if (c.format == "json") {
    os << Json{{"meta", meta}, {"summary", counts}, {"report", to_json(z_statistics(scan.histogram))}}.dump(2)
       << '\n';
  } else {
    os << "zeta scan\n";
    for (auto& [k, v] : counts.items()) os << "  " << k << " = " << v.dump() << '\n';
    write_table(os, z_statistics(scan.histogram));
  }
  if (scan.failures != 0) {
    std::cerr << scan.failures << " evaluation failures\n";
    return kExitAssertion;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- cue

struct CueOpts {
  int N = 64;
  std::uint64_t samples = 100000;
};

int cmd_cue(Common c, const CueOpts& o) {
  CueConfig config = cue_config(o.N, c.seed);
  if (c.preset == "cue-n64") {
    config.N = 64;
    config.samples = 100000;
  } else {
    require(c.preset.empty(), "unknown preset '" + c.preset + "' for cue");
    require(o.N >= 2 && o.N <= 512, "N must lie in [2, 512]");
    require(o.samples >= 1, "samples must be >= 1");
    config.samples = o.samples;
  }
  config.base = c.base;
  config.workers = c.workers;
  const CueResult result = cue_experiment(config.N, config.samples, config.base, config.seed, config.workers);
  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("cue", c);
  meta["N"] = config.N;
  meta["samples"] = config.samples;
  const Json summary = cue_summary(result);
  if (c.format == "csv") {
    meta["summary"] = summary;
    os << csv_metadata_line(meta);
    write_cue_csv(os, result);
  } else if (c.format == "json") {
    os << Json{{"meta", meta}, {"summary", summary}}.dump(2) << '\n';
  } else {
    os << "cue N = " << config.N << ", samples = " << config.samples << '\n';
    os << "  mean = " << result.moments.mean << ", variance = " << result.moments.variance
       << " (Q2 = " << result.q2 << ")\n";
    os << "  skewness = " << result.moments.skewness << ", kurtosis = " << result.moments.kurtosis << '\n';
    write_table(os, z_statistics(result.histogram));
  }
  if (result.max_unitarity_residual >= 1e-10) {
    std::cerr << "unitarity residual " << result.max_unitarity_residual << " exceeds 1e-10\n";
    return kExitAssertion;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- equidist

struct EquidistOpts {
  std::string alpha = "log10(2)";
  std::size_t n = 1'000'000;
  int m = 1000;
  std::size_t depth = 30;
  std::string gammas = "0,0.5,1,1.5,2";
};

struct ParsedAlpha {
  HighPrec value;
  HighPrec uncertainty;
};

ParsedAlpha parse_alpha(const std::string& s) {
  const HighPrec exact_uncertainty = default_uncertainty();
  auto inner = [&](const std::string& prefix) -> std::optional<std::uint64_t> {
    if (s.rfind(prefix, 0) != 0 || s.back() != ')') return std::nullopt;
    const auto v = parse_list(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    if (v.size() != 1 || v[0] == 0) throw ConfigError("bad argument in '" + s + "'");
    return v[0];
  };
  if (s == "pi") return {boost::math::constants::pi<HighPrec>(), exact_uncertainty};
  if (s == "e") return {boost::math::constants::e<HighPrec>(), exact_uncertainty};
  if (s == "golden") return {(1 + sqrt(HighPrec(5))) / 2, exact_uncertainty};
  if (auto v = inner("log10(")) return {log10(HighPrec(*v)), exact_uncertainty};
  if (auto v = inner("sqrt(")) return {sqrt(HighPrec(*v)), exact_uncertainty};
  // A decimal literal is known only to its last digit.
  const auto dot = s.find('.');
  if (s.empty() || s.find_first_not_of("0123456789.") != std::string::npos ||
      s.find('.', dot == std::string::npos ? 0 : dot + 1) != std::string::npos) {
    throw ConfigError("alpha must be pi, e, golden, log10(n), sqrt(n) or a positive decimal");
  }
  const std::size_t frac_digits = dot == std::string::npos ? 0 : s.size() - dot - 1;
  return {HighPrec(s), HighPrec(0.5) * pow(HighPrec(10), -static_cast<long>(frac_digits))};
}

int cmd_equidist(const std::string& which, const Common& c, const EquidistOpts& o) {
  require(c.preset.empty() || c.preset == "equidist", "unknown preset '" + c.preset + "' for equidist");
  const ParsedAlpha alpha = parse_alpha(o.alpha);
  require(alpha.value > 0, "alpha must be positive");
  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("equidist " + which, c);
  meta["alpha"] = o.alpha;
  if (which == "kalpha") {
    require(o.n >= 1 && o.n <= 100'000'000, "n must lie in [1, 1e8]");
    require(o.m >= 1, "m must be >= 1");
    meta["n"] = o.n;
    meta["m"] = o.m;
    const auto points = kalpha_points(split(alpha.value), o.n);
    const DiscrepancyReport report = discrepancy_report(points, o.m);
    if (c.format == "json") {
      os << Json{{"meta", meta}, {"discrepancy", to_json(report)}}.dump(2) << '\n';
    } else {
      if (c.format == "csv") os << csv_metadata_line(meta);
      os << "n_points,star,extreme,erdos_turan,m\n"
         << report.n_points << ',' << fmt_double(report.star) << ',' << fmt_double(report.extreme) << ','
         << fmt_double(report.erdos_turan) << ',' << report.m_used << '\n';
    }
    return kExitOk;
  }
  require(o.depth >= 1 && o.depth <= 2000, "depth must lie in [1, 2000]");
  meta["depth"] = o.depth;
  if (which == "cf") {
    const auto convergents = continued_fraction(alpha.value, o.depth, alpha.uncertainty);
    if (c.format == "json") {
      Json arr = Json::array();
      for (const auto& cv : convergents) {
        arr.push_back({{"a", cv.partial_quotient},
                       {"p", cv.p.to_decimal()},
                       {"q", cv.q.to_decimal()},
                       {"log10_error", cv.log10_error}});
      }
      os << Json{{"meta", meta}, {"convergents", arr}}.dump(2) << '\n';
    } else {
      if (c.format == "csv") os << csv_metadata_line(meta);
      os << "n,a,p,q,log10_q,log10_error\n";
      for (std::size_t i = 0; i < convergents.size(); ++i) {
        const auto& cv = convergents[i];
        os << i << ',' << cv.partial_quotient << ',' << cv.p.to_decimal() << ',' << cv.q.to_decimal() << ','
           << fmt_double(cv.log10_q) << ',' << fmt_double(cv.log10_error) << '\n';
      }
    }
    return kExitOk;
  }
  // type
  std::vector<double> gammas;
  {
    std::stringstream ss(o.gammas);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        gammas.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ConfigError("bad gamma list '" + o.gammas + "'");
      }
    }
  }
  require(!gammas.empty(), "empty gamma grid");
  const IrrationalProbe probe = type_probe(alpha.value, o.depth, gammas);
  if (c.format == "json") {
    Json rows = Json::array();
    for (const auto& r : probe.rows) {
      rows.push_back({{"gamma", r.gamma}, {"tail_slope", r.tail_slope}, {"trends_to_zero", r.trends_to_zero}});
    }
    os << Json{{"meta", meta}, {"rows", rows}, {"empirical_type", probe.empirical_type}}.dump(2) << '\n';
  } else {
    if (c.format == "csv") os << csv_metadata_line(meta);
    os << "gamma,tail_slope,trends_to_zero\n";
    for (const auto& r : probe.rows) {
      os << fmt_double(r.gamma) << ',' << fmt_double(r.tail_slope) << ',' << (r.trends_to_zero ? 1 : 0) << '\n';
    }
    if (c.format == "table") os << "empirical type = " << probe.empirical_type << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- poisson-check

struct PoissonOpts {
  std::string sigmas = "0.1,0.5,1,2,10,50";
  double T = 10.0;
};

int cmd_poisson(const Common& c, const PoissonOpts& o) {
  std::vector<double> sigmas;
  std::stringstream ss(o.sigmas);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      sigmas.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("bad sigma list '" + o.sigmas + "'");
    }
    require(sigmas.back() > 0.0, "sigmas must be positive");
  }
  require(!sigmas.empty(), "empty sigma list");
  require(o.T > 0.0, "T must be positive");
  const PoissonCheck check = poisson_check(sigmas, o.T);
  double max_residual = 0.0;
  for (const auto& r : check.theta) max_residual = std::max(max_residual, r.residual);
  double max_mass_error = 0.0;
  for (const auto& r : check.mass) max_mass_error = std::max(max_mass_error, r.error);

  Output out(c.out);
  auto& os = out.stream();
  Json meta = meta_for("poisson-check", c);
  meta["T"] = o.T;
  if (c.format == "json") {
    Json theta = Json::array();
    for (const auto& r : check.theta) theta.push_back({{"sigma", r.sigma}, {"residual", r.residual}});
    Json mass = Json::array();
    for (const auto& r : check.mass) mass.push_back({{"a", r.a}, {"b", r.b}, {"mass", r.mass}, {"error", r.error}});
    os << Json{{"meta", meta},          {"theta", theta},
               {"mass", mass},          {"max_residual", max_residual},
               {"char_decay", check.char_decay}, {"char_decay_k1", check.char_decay_k1}}
              .dump(2)
       << '\n';
  } else {
    if (c.format == "csv") os << csv_metadata_line(meta);
    os << "sigma,residual\n";
    for (const auto& r : check.theta) os << fmt_double(r.sigma) << ',' << fmt_double(r.residual) << '\n';
    if (c.format == "table") {
      for (const auto& r : check.mass) {
        os << "mass T=" << r.T << " [" << r.a << ", " << r.b << "): " << fmt_double(r.mass) << " (error "
           << r.error << ")\n";
      }
      os << "S(1) = " << check.char_decay << ", 2 exp(-2 pi^2) = " << check.char_decay_k1 << '\n';
      os << "max residual = " << max_residual << '\n';
    }
  }
  if (max_residual >= 1e-12 || max_mass_error >= 1e-8) return kExitAssertion;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leading-digit experiments: Benford tests, 3x+1, zeta, CUE, equidistribution"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  common.workers = default_workers();
  app.add_option("--base", common.base, "Digit base")->check(CLI::Range(2u, 1u << 16));
  app.add_option("--seed", common.seed, "RNG seed");
  app.add_option("--workers", common.workers, "Worker threads (default $BENFORD_LAB_WORKERS or 1)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--out", common.out, "Output path, - for stdout");
  app.add_option("--format", common.format, "csv, json or table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--preset", common.preset, "Named experiment configuration");

  std::string digits_input;
  auto* digits = app.add_subcommand("digits", "Benford test of newline-separated decimal numbers");
  digits->add_option("input", digits_input, "Input file (default stdin)");

  CollatzOpts co;
  auto* collatz = app.add_subcommand("collatz", "3x+1 and (d,g,h) maps");
  collatz->require_subcommand(1);
  auto* c_exp = collatz->add_subcommand("experiment", "Leading digits along one orbit");
  c_exp->add_option("--x0", co.x0, "Seed value (default: random with --digits digits)");
  c_exp->add_option("--digits", co.digits, "Digits of the random seed");
  c_exp->add_option("--mode", co.mode, "remove2 or single")->check(CLI::IsMember({"remove2", "single"}));
  c_exp->add_option("--max-iters", co.max_iters, "Iterate cap");
  auto* c_struct = collatz->add_subcommand("structure", "Inverse images of an m-path");
  c_struct->add_option("--k", co.ktuple, "Comma-separated k-tuple");
  c_struct->add_option("--T", co.T, "Scan bound");
  c_struct->add_option("--max-m", co.max_m, "Sweep: longest tuple");
  c_struct->add_option("--max-sum", co.max_sum, "Sweep: largest k-sum");
  auto* c_k = collatz->add_subcommand("kvalues", "k-value census");
  auto* c_ratio = collatz->add_subcommand("ratio", "First digit of x_m / ((3/4)^m x_0)");
  for (auto* sub : {c_k, c_ratio}) {
    sub->add_option("--start", co.start, "First seed");
    sub->add_option("--stride", co.stride, "Seed spacing");
    sub->add_option("--count", co.count, "Number of seeds");
    sub->add_option("--m", co.m, "Steps per seed");
  }
  c_k->add_option("--d", co.d, "Map modulus d");
  c_k->add_option("--g", co.g, "Map multiplier g");
  c_k->add_option("--h-table", co.h, "h table indexed by residue mod d");
  auto* c_model = collatz->add_subcommand("model", "Geometric k-value model of the ratio digit");
  c_model->add_option("--m", co.m, "Steps");
  c_model->add_option("--samples", co.samples, "Monte Carlo samples");

  ZetaOpts zo;
  auto* zeta_cmd = app.add_subcommand("zeta", "Leading digits of |zeta(sigma + it)| on a t-grid");
  zeta_cmd->add_option("--t-start", zo.t_start, "First t");
  zeta_cmd->add_option("--t-end", zo.t_end, "Last t (inclusive)");
  zeta_cmd->add_option("--step", zo.step, "Grid step");
  zeta_cmd->add_option("--sigma", zo.sigma, "Fixed real part");
  zeta_cmd->add_option("--delta", zo.delta, "Use sigma_T = 1/2 + (log t)^-delta");
  zeta_cmd->add_option("--kappa", zo.kappa, "Log-normal law kappa (reported)");
  zeta_cmd->add_option("--aleph", zo.aleph, "Variance normalization aleph (reported)");

  CueOpts cueo;
  auto* cue = app.add_subcommand("cue", "Characteristic polynomials of Haar unitaries");
  cue->add_option("--N", cueo.N, "Matrix size");
  cue->add_option("--samples", cueo.samples, "Samples");

  EquidistOpts eo;
  auto* equi = app.add_subcommand("equidist", "k alpha mod 1 and continued fractions");
  equi->require_subcommand(1);
  auto* e_kalpha = equi->add_subcommand("kalpha", "Discrepancy of k alpha mod 1");
  auto* e_cf = equi->add_subcommand("cf", "Certified continued fraction");
  auto* e_type = equi->add_subcommand("type", "Irrationality type probe");
  for (auto* sub : {e_kalpha, e_cf, e_type}) {
    sub->add_option("--alpha", eo.alpha, "pi, e, golden, log10(n), sqrt(n) or a decimal");
  }
  e_kalpha->add_option("--n", eo.n, "Number of points");
  e_kalpha->add_option("--m", eo.m, "Erdos-Turan frequency cutoff");
  e_cf->add_option("--depth", eo.depth, "Convergents");
  e_type->add_option("--depth", eo.depth, "Convergents");
  e_type->add_option("--gammas", eo.gammas, "Comma-separated gamma grid");

  PoissonOpts po;
  auto* poisson = app.add_subcommand("poisson-check", "Theta identity and Gaussian spreading mod 1");
  poisson->add_option("--sigmas", po.sigmas, "Comma-separated sigma sweep");
  poisson->add_option("--T", po.T, "Gaussian scale for the mass check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (digits->parsed()) return cmd_digits(common, digits_input);
    if (c_exp->parsed()) return cmd_collatz_experiment(common, co);
    if (c_struct->parsed()) return cmd_collatz_structure(common, co);
    if (c_k->parsed()) return cmd_collatz_kvalues(common, co);
    if (c_ratio->parsed()) return cmd_collatz_ratio(common, co);
    if (c_model->parsed()) return cmd_collatz_model(common, co);
    if (zeta_cmd->parsed()) return cmd_zeta(common, zo);
    if (cue->parsed()) return cmd_cue(common, cueo);
    if (e_kalpha->parsed()) return cmd_equidist("kalpha", common, eo);
    if (e_cf->parsed()) return cmd_equidist("cf", common, eo);
    if (e_type->parsed()) return cmd_equidist("type", common, eo);
    if (poisson->parsed()) return cmd_poisson(common, po);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitConfig;
}
