// Acceptance suite: one test case per release criterion, each printed as a
// single [PASS]/[FAIL] line by the listener below. Run from the repo root so
// the bundled fixtures/ directory resolves.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "test_support.hpp"
#include "workspan/cli.hpp"

using namespace workspan;
using testsupport::random_dag;

namespace {

class CriterionReporter : public Catch::EventListenerBase {
public:
    using EventListenerBase::EventListenerBase;
    void testCaseEnded(const Catch::TestCaseStats& stats) override {
        const bool ok = stats.totals.assertions.failed == 0;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << stats.testInfo->name << "\n";
    }
};

std::string shipped_fixture_path() {
    namespace fs = std::filesystem;
    for (const char* candidate : {"fixtures/leiserson.dag", "../fixtures/leiserson.dag"})
        if (fs::exists(candidate))
            return candidate;
    return "fixtures/leiserson.dag";
}

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

CATCH_REGISTER_LISTENER(CriterionReporter)

TEST_CASE("criterion 1: analyze reproduces T1=18 Tinf=9 Sinf=2 W=18 T=9 A=2") {
    std::ifstream in(shipped_fixture_path(), std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    const TaskGraph shipped = parse_graph(buf.str());
    REQUIRE(shipped == fixture_leiserson());

    const MetricsReport r = make_metrics_report(shipped);
    REQUIRE(r.t1 == Rational(18));
    REQUIRE(r.t_inf == Rational(9));
    REQUIRE(r.parallelism == Rational(2));
    REQUIRE(r.work_w == Rational(18));
    REQUIRE(r.total_time_t == Rational(9));
    REQUIRE(r.avg_parallelism == Rational(2));

    const RunResult cli = run({"analyze", shipped_fixture_path(), "--format", "json"});
    REQUIRE(cli.code == 0);
    const auto j = nlohmann::json::parse(cli.out);
    REQUIRE(j["t1"]["exact"] == "18");
    REQUIRE(j["t_inf"]["exact"] == "9");
    REQUIRE(j["parallelism"]["exact"] == "2");
    REQUIRE(j["work_w"]["exact"] == "18");
    REQUIRE(j["total_time_t"]["exact"] == "9");
    REQUIRE(j["avg_parallelism"]["exact"] == "2");
}

TEST_CASE("criterion 2: sigma=4/18, asymptote=4.5, amdahl(1e6) within 1e-3 of 4.5") {
    const AmdahlModel m = serial_fraction(fixture_leiserson());
    REQUIRE(m.sigma == Rational(4, 18));
    REQUIRE(*amdahl_asymptote(m) == Rational(9, 2));

    const Rational at_million = amdahl_speedup(m, 1000000);
    REQUIRE(at_million <= Rational(9, 2));
    REQUIRE(Rational(9, 2) - at_million <= Rational(1, 1000));
}

TEST_CASE("criterion 3: parallelism == average parallelism on 500 unit-weight DAGs") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 500; ++trial) {
        const TaskGraph g = random_dag(rng, 40, true);
        REQUIRE(parallelism(g) == average_parallelism(g));
    }
}

TEST_CASE("criterion 4: depth-one compression gives span 1, S18=18, E18=1") {
    const TaskGraph flat = strip_edges(fixture_leiserson());
    REQUIRE(critical_path(flat).span == Rational(1));

    const LevelProfile profile = level_profile(flat);
    REQUIRE(profile.rows.size() == 1);
    REQUIRE(profile.rows.front().width == 18);

    REQUIRE(greedy_schedule(flat, 18).makespan == Rational(1));

    const SpeedupSeries series = speedup_series(flat, {18});
    REQUIRE(series.rows.front().s_p == Rational(18));
    REQUIRE(series.rows.front().e_p == Rational(1));
}

TEST_CASE("criterion 5: greedy obeys max(T1/p,Tinf) <= Tp <= T1/p+Tinf on 500 DAGs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        const TaskGraph g = random_dag(rng, 40, false);
        const Rational t1 = total_work(g);
        const Rational t_inf = critical_path(g).span;
        for (const std::int64_t p : {1, 2, 3, 5, 8}) {
            const Rational tp = greedy_schedule(g, p).makespan;
            REQUIRE(tp >= max(t1 / Rational(p), t_inf));
            REQUIRE(tp <= t1 / Rational(p) + t_inf);
        }
    }
}

TEST_CASE("criterion 6: optimal_makespan sandwich on 100 small DAGs") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const TaskGraph g = random_dag(rng, 8, trial % 2 == 0);
        const Rational t1 = total_work(g);
        const Rational t_inf = critical_path(g).span;
        for (const std::int64_t p : {2, 3}) {
            const Rational opt = optimal_makespan(g, p);
            REQUIRE(opt <= greedy_schedule(g, p).makespan);
            REQUIRE(opt >= max(t1 / Rational(p), t_inf));
        }
    }
}

TEST_CASE("criterion 7: amdahl asymptote >= parallelism on 500 DAGs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const TaskGraph g = random_dag(rng, 30, trial % 2 == 0);
        const auto asymptote = amdahl_asymptote(serial_fraction(g));
        if (asymptote)
            REQUIRE(*asymptote >= parallelism(g));
    }
}

TEST_CASE("criterion 8: rebaselining clamps E_p to 1, idempotently") {
    const SuperlinearReport worked = detect_superlinear(
        measured_series({{1, Rational(36)}, {2, Rational(11)}, {4, Rational(6)}}));
    REQUIRE(worked.verdict == SuperlinearVerdict::baseline_artifact);
    REQUIRE(worked.flagged.size() == 2);
    REQUIRE(worked.flagged[0].e_p == Rational(18, 11));
    REQUIRE(worked.flagged[1].e_p == Rational(3, 2));
    REQUIRE(worked.corrected_baseline == Rational(22));
    REQUIRE(worked.corrected_series.rows[0].e_p == Rational(11, 18));
    REQUIRE(worked.corrected_series.rows[1].e_p == Rational(1));
    REQUIRE(worked.corrected_series.rows[2].e_p == Rational(11, 12));

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<std::int64_t, Rational>> rows;
        std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, 2)(rng);
        const int count = std::uniform_int_distribution<int>(1, 10)(rng);
        for (int k = 0; k < count; ++k) {
            rows.emplace_back(
                p, Rational(std::uniform_int_distribution<std::int64_t>(1, 90)(rng),
                            std::uniform_int_distribution<std::int64_t>(1, 6)(rng)));
            p += std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
        }
        const SpeedupSeries series =
            make_series(rows, Rational(64), SeriesSource::measured);
        const SuperlinearReport first = detect_superlinear(series);
        for (const SeriesRow& row : first.corrected_series.rows)
            REQUIRE(row.e_p <= Rational(1));
        const SuperlinearReport second = detect_superlinear(first.corrected_series);
        REQUIRE(second.verdict == SuperlinearVerdict::no_superlinearity);
        REQUIRE(second.corrected_baseline == first.corrected_baseline);
        for (std::size_t k = 0; k < first.corrected_series.rows.size(); ++k)
            REQUIRE(second.corrected_series.rows[k].e_p ==
                    first.corrected_series.rows[k].e_p);
    }
}

TEST_CASE("criterion 9: CLI runs are byte-identical; parse/write round-trips") {
    const std::string fixture = shipped_fixture_path();
    const auto csv_dir = std::filesystem::temp_directory_path() / "workspan_acceptance";
    std::filesystem::create_directories(csv_dir);
    const auto csv = (csv_dir / "measure.csv").string();
    std::ofstream(csv) << "p,t_p\n1,36\n2,11\n4,6\n";

    const std::vector<std::vector<std::string>> invocations = {
        {"analyze", fixture},
        {"analyze", fixture, "--format", "json"},
        {"analyze", fixture, "--format", "csv"},
        {"simulate", fixture, "--procs", "1,2,18"},
        {"simulate", fixture, "--procs", "1,2,18", "--format", "json"},
        {"simulate", fixture, "--procs", "1,2,18", "--format", "csv"},
        {"amdahl", fixture, "--pmax", "8"},
        {"amdahl", fixture, "--pmax", "8", "--format", "json"},
        {"amdahl", fixture, "--pmax", "8", "--format", "csv"},
        {"reconcile", fixture, "--pmax", "8"},
        {"reconcile", fixture, "--pmax", "8", "--format", "json"},
        {"reconcile", fixture, "--pmax", "8", "--format", "csv"},
        {"check-bounds", fixture, "--measurements", csv},
        {"check-bounds", fixture, "--measurements", csv, "--format", "json"},
        {"check-bounds", fixture, "--measurements", csv, "--format", "csv"},
        {"superlinear", "--measurements", csv},
        {"superlinear", "--measurements", csv, "--format", "json"},
        {"superlinear", "--measurements", csv, "--format", "csv"},
        {"fixture", "leiserson"},
    };
    for (const auto& args : invocations) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        REQUIRE(a.code == 0);
        REQUIRE(b.code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE(a.err == b.err);
        REQUIRE_FALSE(a.out.empty());
    }

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 500; ++trial) {
        const TaskGraph g = random_dag(rng, 24, trial % 2 == 0);
        REQUIRE(parse_graph(write_graph(g)) == g);
    }
}
