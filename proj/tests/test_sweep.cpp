#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hyperspec/sweep.hpp"

using namespace hyperspec;

TEST_CASE("sweep config validation") {
    SweepConfig c;
    c.samples = 0;
    CHECK_THROWS_AS(check_config(c), std::invalid_argument);
    c.samples = 1;
    c.k.clear();
    CHECK_THROWS_AS(check_config(c), std::invalid_argument);
    c.k = {3};
    c.n = {5, 4};
    CHECK_THROWS_AS(check_config(c), std::invalid_argument);
}

TEST_CASE("sweep output is independent of worker count") {
    SweepConfig c;
    c.n = {3, 6};
    c.k = {2, 3};
    c.m = {1, 6};
    c.samples = 2;
    c.seed = 11;
    c.workers = 1;
    const auto one = run_sweep(c);
    c.workers = 8;
    const auto eight = run_sweep(c);
    CHECK(sweep_csv(one) == sweep_csv(eight));
    CHECK(sweep_summary_json(one) == sweep_summary_json(eight));
    CHECK(one.asserted_violations() == 0);
    CHECK_FALSE(one.instances.empty());
}

TEST_CASE("single edge family sweep") {
    SweepConfig c;
    c.family = SweepFamily::SingleEdge;
    c.k = {};
    for (int k = 3; k <= 12; ++k) c.k.push_back(k);
    const auto r = run_sweep(c);
    REQUIRE(r.instances.size() == 10);
    double previous = 10.0;
    for (const auto& inst : r.instances) {
        REQUIRE(inst.summary.has_value());
        const double s = inst.summary->s_q;
        CHECK(std::abs(s - (1.0 + 1.0 / (inst.k - 1))) <= 1e-9);
        CHECK(s < previous);
        CHECK(s > 1.0);
        previous = s;
    }
}

TEST_CASE("summary json shape") {
    SweepConfig c;
    c.n = {4, 5};
    c.k = {3};
    c.m = {2, 4};
    c.seed = 3;
    c.timing = true;
    const auto j = nlohmann::json::parse(sweep_summary_json(run_sweep(c)));
    CHECK(j["bounds"].size() == 25);
    CHECK(j.contains("timing"));
    CHECK(j["asserted_violations"] == 0);
    c.timing = false;
    CHECK_FALSE(nlohmann::json::parse(sweep_summary_json(run_sweep(c))).contains("timing"));
}

TEST_CASE("instance seeds differ per cell and are stable") {
    CHECK(instance_seed(7, 5, 3, 4, 0) == instance_seed(7, 5, 3, 4, 0));
    CHECK(instance_seed(7, 5, 3, 4, 0) != instance_seed(7, 5, 3, 4, 1));
    CHECK(instance_seed(7, 5, 3, 4, 0) != instance_seed(8, 5, 3, 4, 0));
}
