#pragma once

#include <cstdint>
#include <vector>

#include "workspan/scheduler.hpp"

namespace workspan {

enum class SuperlinearVerdict { no_superlinearity, baseline_artifact };

inline const char* verdict_name(SuperlinearVerdict v) {
    return v == SuperlinearVerdict::no_superlinearity ? "no_superlinearity"
                                                      : "baseline_artifact";
}

struct FlaggedRow {
    std::int64_t p = 0;
    Rational e_p;
};

struct SuperlinearReport {
    std::vector<FlaggedRow> flagged;
    Rational corrected_baseline; // min over rows of p * t_p
    SpeedupSeries corrected_series;
    SuperlinearVerdict verdict = SuperlinearVerdict::no_superlinearity;
};

/// Flags every row with efficiency above one, then rebuilds the series
/// against the largest serial baseline consistent with E_p <= 1 everywhere:
/// min_p(p * t_p). Running the correction twice changes nothing.
inline SuperlinearReport detect_superlinear(const SpeedupSeries& series) {
    if (series.rows.empty())
        throw std::invalid_argument("detect_superlinear: series has no rows");
    SuperlinearReport report;
    std::vector<std::pair<std::int64_t, Rational>> timings;
    bool first = true;
    for (const SeriesRow& row : series.rows) {
        if (!row.t_p.is_positive())
            throw Error(Errc::nonpositive_time,
                        "measured T_p must be positive, got " + row.t_p.to_string());
        if (row.e_p > Rational(1))
            report.flagged.push_back({row.p, row.e_p});
        const Rational product = Rational(row.p) * row.t_p;
        if (first || product < report.corrected_baseline) {
            report.corrected_baseline = product;
            first = false;
        }
        timings.emplace_back(row.p, row.t_p);
    }
    report.corrected_series =
        make_series(timings, report.corrected_baseline, series.source);
    report.verdict = report.flagged.empty() ? SuperlinearVerdict::no_superlinearity
                                            : SuperlinearVerdict::baseline_artifact;
    return report;
}

} // namespace workspan
