#include "benford/report.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace benford {

std::string fmt_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const DigitHistogram& hist) {
  Json counts = Json::array();
  for (auto c : hist.counts()) counts.push_back(c);
  return {{"base", hist.base()}, {"total", hist.total()}, {"counts", counts}};
}

Json to_json(const TestReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.per_digit) {
    rows.push_back({{"digit", r.digit}, {"observed", r.observed}, {"benford", r.benford}, {"z", r.z}});
  }
  return {{"base", report.base},
          {"total", report.total},
          {"digits", rows},
          {"chi_square", report.chi_square},
          {"dof", report.dof},
          {"critical_05", chi_square_critical(report.dof, 0.05)},
          {"benford_not_rejected_05", report.verdict_alpha05}};
}

Json to_json(const DiscrepancyReport& report) {
  return {{"n_points", report.n_points},
          {"star", report.star},
          {"extreme", report.extreme},
          {"erdos_turan", report.erdos_turan},
          {"m", report.m_used}};
}

Json to_json(const Moments& m) {
  return {{"n", m.n}, {"mean", m.mean}, {"variance", m.variance}, {"skewness", m.skewness}, {"kurtosis", m.kurtosis}};
}

Json to_json(const PathRecord& record) {
  Json j{{"seed", record.seed.to_decimal()}, {"m", record.m}, {"k", record.kvalues}};
  if (record.iterates) {
    Json xs = Json::array();
    for (const auto& x : *record.iterates) xs.push_back(x.to_decimal());
    j["iterates"] = xs;
  }
  return j;
}

Json to_json(const KValueStats& stats) {
  Json freq = Json::object();
  for (std::size_t n = 1; n < stats.counts.size(); ++n) freq[std::to_string(n)] = stats.counts[n];
  return {{"total", stats.total}, {"mean", stats.mean}, {"variance", stats.variance}, {"counts", freq}};
}

std::string csv_metadata_line(const Json& meta) { return "# " + meta.dump() + "\n"; }

void write_csv(std::ostream& out, const TestReport& report) {
  out << "digit,count,observed,benford,z\n";
  for (const auto& r : report.per_digit) {
    const auto count = static_cast<std::uint64_t>(std::llround(r.observed * static_cast<double>(report.total)));
    out << r.digit << ',' << count << ',' << fmt_double(r.observed) << ',' << fmt_double(r.benford) << ','
        << fmt_double(r.z) << '\n';
  }
}

void write_table(std::ostream& out, const TestReport& report) {
  char line[128];
  std::snprintf(line, sizeof line, "%-6s %10s %10s %8s\n", "digit", "observed", "benford", "z");
  out << line;
  for (const auto& r : report.per_digit) {
    std::snprintf(line, sizeof line, "%-6u %10.4f %10.4f %8.2f\n", r.digit, r.observed, r.benford, r.z);
    out << line;
  }
  std::snprintf(line, sizeof line, "n = %llu, chi^2 = %.2f (%d dof, 5%% critical %.2f)\n",
                static_cast<unsigned long long>(report.total), report.chi_square, report.dof,
                chi_square_critical(report.dof, 0.05));
  out << line;
}

void write_ratio_table(std::ostream& out, const RatioTable& table) {
  const unsigned base = table.histogram.base();
  out << std::left << std::setw(7) << "Digit" << std::right;
  for (unsigned d = 1; d < base; ++d) out << " | " << std::setw(15) << d;
  out << "\n" << std::left << std::setw(7) << ("Base " + std::to_string(base)) << std::right;
  char cell[32];
  for (unsigned d = 1; d < base; ++d) {
    const double observed = 100.0 * table.histogram.frequency(d);
    const double predicted = 100.0 * table.prediction[d - 1];
    if (predicted == 0.0) {
      std::snprintf(cell, sizeof cell, "%.1f%%", observed);
    } else {
      std::snprintf(cell, sizeof cell, "%.1f%% (%.1f%%)", observed, predicted);
    }
    out << " | " << std::setw(15) << cell;
  }
  out << '\n';
}

void write_ratio_csv(std::ostream& out, const RatioTable& table) {
  out << "digit,count,observed,predicted\n";
  for (unsigned d = 1; d < table.histogram.base(); ++d) {
    out << d << ',' << table.histogram.count(d) << ',' << fmt_double(table.histogram.frequency(d)) << ','
        << fmt_double(table.prediction[d - 1]) << '\n';
  }
}

Json to_json(const RatioTable& table) {
  return {{"start", table.config.start.to_decimal()},
          {"stride", table.config.stride},
          {"count", table.config.count},
          {"m", table.config.m},
          {"histogram", to_json(table.histogram)},
          {"prediction", table.prediction}};
}

void write_zeta_csv(std::ostream& out, const ZetaScan& scan) {
  out << "t,sigma,re,im,abs,log_abs,digit,cert_err\n";
  for (const auto& s : scan.samples) {
    out << fmt_double(s.t) << ',' << fmt_double(s.sigma) << ',' << fmt_double(s.value.real()) << ','
        << fmt_double(s.value.imag()) << ',' << fmt_double(s.abs) << ',' << fmt_double(s.log_abs) << ','
        << s.leading_digit << ',' << fmt_double(s.cert_err) << '\n';
  }
}

void write_cue_csv(std::ostream& out, const CueResult& result) {
  out << "N,theta,log_abs,standardized\n";
  for (const auto& s : result.samples) {
    out << s.N << ',' << fmt_double(s.theta) << ',' << fmt_double(s.log_abs) << ',' << fmt_double(s.standardized)
        << '\n';
  }
}

Json cue_summary(const CueResult& result) {
  return {{"N", result.N},
          {"q2", result.q2},
          {"moments", to_json(result.moments)},
          {"variance_ratio", result.moments.variance / result.q2},
          {"resampled", result.resampled},
          {"max_unitarity_residual", result.max_unitarity_residual},
          {"digits", to_json(z_statistics(result.histogram))}};
}

}  // namespace benford
