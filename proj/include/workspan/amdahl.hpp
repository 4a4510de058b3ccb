#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "workspan/metrics.hpp"
#include "workspan/task_graph.hpp"

namespace workspan {

enum class SigmaSource { from_graph, user_supplied };

struct AmdahlModel {
    Rational sigma; // serial fraction in [0, 1]
    SigmaSource source = SigmaSource::from_graph;
};

inline const char* sigma_source_name(SigmaSource s) {
    return s == SigmaSource::from_graph ? "from_graph" : "user_supplied";
}

inline AmdahlModel make_amdahl_model(const Rational& sigma, SigmaSource source) {
    if (sigma < Rational(0) || sigma > Rational(1))
        throw Error(Errc::invalid_sigma,
                    "serial fraction must lie in [0, 1], got " + sigma.to_string());
    return AmdahlModel{sigma, source};
}

/// Serial weight over total weight. On unit weights this is the serial node
/// count over the node count.
inline AmdahlModel serial_fraction(const TaskGraph& g) {
    Rational serial;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (is_serial_node(g, g.id_of(v)))
            serial += g.weight(v);
    return AmdahlModel{serial / total_work(g), SigmaSource::from_graph};
}

/// p / (1 + sigma * (p - 1))
inline Rational amdahl_speedup(const AmdahlModel& m, std::int64_t p) {
    if (p < 1)
        throw std::invalid_argument("amdahl_speedup: processor count must be >= 1");
    const Rational pr(p);
    return pr / (Rational(1) + m.sigma * (pr - Rational(1)));
}

/// 1/sigma, or nullopt when sigma is zero (the speedup grows without bound).
inline std::optional<Rational> amdahl_asymptote(const AmdahlModel& m) {
    if (m.sigma.is_zero())
        return std::nullopt;
    return Rational(1) / m.sigma;
}

/// The `amdahl` command's payload: one model evaluated over p = 1..p_max.
struct AmdahlCurve {
    AmdahlModel model;
    std::optional<Rational> asymptote;
    std::vector<std::pair<std::int64_t, Rational>> rows; // (p, speedup)
};

inline AmdahlCurve amdahl_curve(const AmdahlModel& model, std::int64_t p_max) {
    if (p_max < 1)
        throw std::invalid_argument("amdahl_curve: p_max must be >= 1");
    AmdahlCurve curve;
    curve.model = model;
    curve.asymptote = amdahl_asymptote(model);
    curve.rows.reserve(static_cast<std::size_t>(p_max));
    for (std::int64_t p = 1; p <= p_max; ++p)
        curve.rows.emplace_back(p, amdahl_speedup(model, p));
    return curve;
}

enum class Governing { linear, amdahl, span };

inline const char* governing_name(Governing b) {
    switch (b) {
    case Governing::linear: return "linear";
    case Governing::amdahl: return "amdahl";
    case Governing::span: return "span";
    }
    return "?";
}

struct ReconciliationRow {
    std::int64_t p = 0;
    Rational linear_bound; // p
    Rational amdahl_value; // Amdahl speedup at p
    Rational span_bound;   // S_inf
    Governing governing = Governing::linear;
};

struct ReconciliationReport {
    Rational parallelism;
    std::optional<Rational> amdahl_asymptote; // nullopt = unbounded
    std::vector<ReconciliationRow> curve;
    bool consistent = false; // asymptote >= parallelism
};

/// Lines up the three speedup ceilings for p = 1..p_max and marks which one
/// binds. Ties resolve linear, then amdahl, then span.
inline ReconciliationReport reconcile(const TaskGraph& g, std::int64_t p_max) {
    if (p_max < 1)
        throw std::invalid_argument("reconcile: p_max must be >= 1");
    const AmdahlModel model = serial_fraction(g);
    ReconciliationReport report;
    report.parallelism = parallelism(g);
    report.amdahl_asymptote = amdahl_asymptote(model);
    report.consistent =
        !report.amdahl_asymptote || *report.amdahl_asymptote >= report.parallelism;
    report.curve.reserve(static_cast<std::size_t>(p_max));
    for (std::int64_t p = 1; p <= p_max; ++p) {
        ReconciliationRow row;
        row.p = p;
        row.linear_bound = Rational(p);
        row.amdahl_value = amdahl_speedup(model, p);
        row.span_bound = report.parallelism;
        Rational smallest = row.linear_bound;
        row.governing = Governing::linear;
        if (row.amdahl_value < smallest) {
            smallest = row.amdahl_value;
            row.governing = Governing::amdahl;
        }
        if (row.span_bound < smallest)
            row.governing = Governing::span;
        report.curve.push_back(row);
    }
    return report;
}

} // namespace workspan
