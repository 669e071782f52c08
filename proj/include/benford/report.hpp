#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "benford/collatz.hpp"
#include "benford/experiments.hpp"
#include "benford/rmt.hpp"
#include "benford/stats.hpp"
#include "benford/zeta.hpp"

namespace benford {

using Json = nlohmann::ordered_json;

Json to_json(const DigitHistogram& hist);
Json to_json(const TestReport& report);
Json to_json(const DiscrepancyReport& report);
Json to_json(const Moments& moments);
Json to_json(const PathRecord& record);
Json to_json(const KValueStats& stats);

/// Single `#`-prefixed metadata line heading every CSV file.
std::string csv_metadata_line(const Json& meta);

/// digit, count, observed, benford, z.
void write_csv(std::ostream& out, const TestReport& report);
/// Aligned digit table with chi^2 footer.
void write_table(std::ostream& out, const TestReport& report);

/// "50.2% (50.0%)" cells, one column per digit, as in the published tables.
void write_ratio_table(std::ostream& out, const RatioTable& table);
void write_ratio_csv(std::ostream& out, const RatioTable& table);
Json to_json(const RatioTable& table);

/// t, sigma, re, im, abs, log_abs, digit, cert_err.
void write_zeta_csv(std::ostream& out, const ZetaScan& scan);
/// N, theta, log_abs, standardized.
void write_cue_csv(std::ostream& out, const CueResult& result);
Json cue_summary(const CueResult& result);

/// Full-precision, locale-independent formatting for CSV cells.
std::string fmt_double(double x);

}  // namespace benford
