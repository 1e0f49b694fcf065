#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fedaloha/sim.hpp"

using namespace fedaloha;

namespace {

SimConfig small(Policy p) {
    SimConfig c;
    c.users = 60;
    c.channels = 4;
    c.dimension = 5;
    c.p_comp = 0.5;
    c.horizon = 40;
    c.policy = p;
    c.seed = 12;
    return c;
}

constexpr Policy kAll[] = {Policy::Polling, Policy::EqualAloha, Policy::AdaptiveAloha, Policy::Ccd,
                           Policy::GenieMaxNorm};

}  // namespace

TEST_CASE("SimConfig::validate") {
    SimConfig c;
    CHECK_NOTHROW(c.validate());
    auto rejects = [](auto mutate) {
        SimConfig bad;
        mutate(bad);
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    };
    rejects([](SimConfig& s) { s.channels = s.users + 1; });
    rejects([](SimConfig& s) { s.horizon = 0; });
    rejects([](SimConfig& s) { s.runs = 0; });
    rejects([](SimConfig& s) { s.users = 0; });
    rejects([](SimConfig& s) { s.dimension = 0; });
    rejects([](SimConfig& s) { s.p_comp = 1.01; });
    rejects([](SimConfig& s) { s.p_comp = -0.01; });
    rejects([](SimConfig& s) { s.local_step = 0.0; });
    rejects([](SimConfig& s) { s.feedback_step = -1.0; });
    rejects([](SimConfig& s) { s.initial_feedback = INFINITY; });

    SimConfig bad;
    bad.channels = 2000;
    CHECK_THROWS_AS(run(bad), std::invalid_argument);
}

TEST_CASE("single user polled every iteration follows plain gradient descent") {
    SimConfig c;
    c.users = 1;
    c.channels = 1;
    c.dimension = 3;
    c.p_comp = 1.0;
    c.horizon = 50;
    c.policy = Policy::Polling;
    c.seed = 4;
    const auto traj = run(c);

    Rng rng(c.seed);
    const auto inst = generate_instance(1, 3, rng);
    const auto& d = inst.datasets[0];
    std::vector<double> w(3, 0.0);
    for (const auto& r : traj.reports) {
        CHECK(r.successes == 1);
        double res = -d.y;
        for (std::size_t i = 0; i < 3; ++i) res += d.x[i] * w[i];
        for (std::size_t i = 0; i < 3; ++i) w[i] -= c.local_step * res * d.x[i];
        double err = 0.0;
        for (std::size_t i = 0; i < 3; ++i) err += (w[i] - inst.w_true[i]) * (w[i] - inst.w_true[i]);
        CHECK(r.error == doctest::Approx(std::sqrt(err)).epsilon(1e-12));
    }
}

TEST_CASE("determinism and per-round conservation for every policy") {
    for (Policy p : kAll) {
        CAPTURE(static_cast<int>(p));
        const auto c = small(p);
        const auto a = run(c);
        const auto b = run(c);
        REQUIRE(a.reports.size() == c.horizon);
        CHECK(a.final_w == b.final_w);
        for (std::size_t t = 0; t < c.horizon; ++t) {
            const auto& r = a.reports[t];
            const auto& s = b.reports[t];
            CHECK(r.t == t);
            CHECK(r.error == s.error);
            CHECK(r.successes == s.successes);
            CHECK(r.active == s.active);
            CHECK(r.psi == s.psi);
            CHECK(r.collisions == s.collisions);

            CHECK(r.successes + r.collisions == r.active);
            CHECK(r.successes <= r.active);
            CHECK(r.successes <= c.channels);
            CHECK(std::isfinite(r.error));
            if (p != Policy::AdaptiveAloha) CHECK(r.psi == 0.0);
        }
    }
}

TEST_CASE("reported psi follows the dual-ascent recursion") {
    const auto c = small(Policy::AdaptiveAloha);
    const auto traj = run(c);
    CHECK(traj.reports.front().psi == c.initial_feedback);
    for (std::size_t t = 0; t + 1 < traj.reports.size(); ++t) {
        const auto& r = traj.reports[t];
        CHECK(traj.reports[t + 1].psi ==
              r.psi + c.feedback_step * (static_cast<double>(r.active) - static_cast<double>(c.channels)));
    }
}

TEST_CASE("polling with full availability covers every user once per pass") {
    SimConfig c;
    c.users = 40;
    c.channels = 5;
    c.dimension = 3;
    c.p_comp = 1.0;
    c.horizon = 8;  // K / M
    c.policy = Policy::Polling;

    Rng rng(c.seed);
    const auto inst = generate_instance(c.users, c.dimension, rng);
    WeightVector expected(c.dimension);
    std::vector<int> touched(c.users, 0);
    const auto traj = run(c, [&](std::size_t t, const WeightVector& w) {
        std::vector<WeightVector> updates;
        for (UserId u : poll_schedule(t, c.users, c.channels)) {
            ++touched[u];
            updates.push_back(local_update(expected, inst.datasets[u], c.local_step));
        }
        expected = aggregate(expected, updates, AggregationMode::Mean);
        CHECK(w == expected);
    });
    for (const auto& r : traj.reports) CHECK(r.successes == c.channels);
    CHECK(std::all_of(touched.begin(), touched.end(), [](int n) { return n == 1; }));
}

TEST_CASE("CCD with full availability is the cyclic single-user recursion") {
    SimConfig c;
    c.users = 25;
    c.channels = 1;
    c.dimension = 4;
    c.p_comp = 1.0;
    c.horizon = 200;
    c.policy = Policy::Ccd;

    Rng rng(c.seed);
    const auto inst = generate_instance(c.users, c.dimension, rng);
    std::vector<double> w(c.dimension, 0.0);
    run(c, [&](std::size_t t, const WeightVector& got) {
        const auto& d = inst.datasets[t % c.users];
        double r = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) r += d.x[i] * w[i];
        r -= d.y;
        const double scaled = c.local_step * r;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] -= scaled * d.x[i];
        for (std::size_t i = 0; i < w.size(); ++i) CHECK(got[i] == w[i]);
    });
}

TEST_CASE("single-uploader policies waste the iteration when the pick is unavailable") {
    for (Policy p : {Policy::Ccd, Policy::GenieMaxNorm}) {
        auto c = small(p);
        c.p_comp = 0.0;
        for (const auto& r : run(c).reports) {
            CHECK(r.active == 0);
            CHECK(r.successes == 0);
        }
        c.p_comp = 1.0;
        for (const auto& r : run(c).reports) CHECK(r.successes == 1);
    }
}

TEST_CASE("equal-probability ALOHA at Fig. 2 scale averages ~3.68 uploads") {
    SimConfig c;
    c.policy = Policy::EqualAloha;
    c.horizon = 2000;
    const auto traj = run(c);
    double sum = 0.0;
    for (const auto& r : traj.reports) sum += r.successes;
    // sample-mean sd ~ sqrt(3.3 / 2000) = 0.04
    CHECK(std::abs(sum / c.horizon - 3.68063488259223) < 0.2);
}

TEST_CASE("run_many") {
    const auto c = small(Policy::EqualAloha);
    SUBCASE("one run is the run itself") {
        const auto e = run_many(c, 1);
        const auto t = run(c);
        REQUIRE(e.rounds.size() == t.reports.size());
        for (std::size_t i = 0; i < t.reports.size(); ++i) {
            CHECK(e.rounds[i].error_mean == t.reports[i].error);
            CHECK(e.rounds[i].error_std == 0.0);
            CHECK(e.rounds[i].successes_mean == double(t.reports[i].successes));
        }
        CHECK(e.final_errors == std::vector<double>{t.reports.back().error});
    }
    SUBCASE("derived seeds give distinct runs") {
        CHECK(derive_seed(c.seed, 0) == c.seed);
        CHECK(derive_seed(c.seed, 1) != derive_seed(c.seed, 0));
        const auto e = run_many(c, 2);
        CHECK(e.final_errors[0] != e.final_errors[1]);
    }
    SUBCASE("thread count does not change the result") {
        const auto a = run_many(c, 7, 1);
        const auto b = run_many(c, 7, 3);
        CHECK(a.final_errors == b.final_errors);
        for (std::size_t i = 0; i < a.rounds.size(); ++i) {
            CHECK(a.rounds[i].error_mean == b.rounds[i].error_mean);
            CHECK(a.rounds[i].error_std == b.rounds[i].error_std);
            CHECK(a.rounds[i].psi_mean == b.rounds[i].psi_mean);
        }
    }
    SUBCASE("standard error shrinks by about sqrt(2) when runs double") {
        auto cfg = small(Policy::EqualAloha);
        cfg.horizon = 30;
        const auto e100 = run_many(cfg, 100);
        const auto e200 = run_many(cfg, 200);
        const double se100 = e100.rounds.back().error_std / std::sqrt(100.0);
        const double se200 = e200.rounds.back().error_std / std::sqrt(200.0);
        const double ratio = se100 / se200;
        CHECK(ratio > std::sqrt(2.0) * 0.8);
        CHECK(ratio < std::sqrt(2.0) * 1.25);
    }
    CHECK_THROWS_AS(run_many(c, 0), std::invalid_argument);
}
