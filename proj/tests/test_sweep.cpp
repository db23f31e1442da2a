#include "demazure/sweep.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <set>

using namespace dmz;

namespace {

std::vector<SweepInstance> grid(const WeylGroup& g, int max_coord) {
    std::vector<SweepInstance> out;
    for (const auto& lam : enumerate_lambdas(g.rank(), max_coord))
        for (size_t w = 0; w < g.order(); ++w) out.push_back({lam, int(w)});
    return out;
}

}  // namespace

TEST_CASE("lambda grids") {
    CHECK(enumerate_lambdas(2, 4).size() == 25);
    CHECK(enumerate_lambdas(3, 2).size() == 27);
    CHECK(enumerate_lambdas(1, 0).size() == 1);
}

TEST_CASE("element sampling is deterministic and distinct") {
    WeylGroup g(RootDatum::build('B', 3));
    auto a = sample_elements(g, 10, 42);
    auto b = sample_elements(g, 10, 42);
    CHECK(a == b);
    CHECK(std::set<int>(a.begin(), a.end()).size() == 10);
    CHECK(sample_elements(g, 500, 1).size() == g.order());
}

TEST_CASE("the quoted 150-instance sweep passes and parallel equals serial") {
    WeylGroup g(RootDatum::build('A', 2));
    auto instances = grid(g, 4);
    CHECK(instances.size() == 150);

    SweepOptions serial;
    serial.parallel = false;
    SweepReport a = run_saturation_sweep(g, instances, serial);
    CHECK(a.failures == 0);
    CHECK(a.records.size() == 150);

    SweepOptions parallel;
    parallel.parallel = true;
    SweepReport b = run_saturation_sweep(g, instances, parallel);
    CHECK(dump_json(a.to_json()) == dump_json(b.to_json()));
}

TEST_CASE("report is byte-stable and cache round trips") {
    WeylGroup g(RootDatum::build('B', 2));
    auto instances = grid(g, 2);

    std::string cache = "/tmp/dmz_test_cache_" + std::to_string(::getpid()) + ".sweepcache";
    std::remove(cache.c_str());

    SweepOptions opts;
    opts.cache_path = cache;
    SweepReport first = run_saturation_sweep(g, instances, opts);
    CHECK(first.failures == 0);
    {
        std::ifstream is(cache);
        REQUIRE(is.good());
        std::string header;
        std::getline(is, header);
        CHECK(header == "# demazure sweep cache v1");
    }
    SweepReport second = run_saturation_sweep(g, instances, opts);
    CHECK(dump_json(first.to_json()) == dump_json(second.to_json()));

    // corrupted header: rebuilt from scratch, same report
    atomic_write(cache, "# not a cache\n");
    SweepReport third = run_saturation_sweep(g, instances, opts);
    CHECK(dump_json(first.to_json()) == dump_json(third.to_json()));

    // poisoned record: the spot check must notice and rebuild
    SweepReport fourth = run_saturation_sweep(g, instances, opts);
    std::ifstream is(cache);
    std::string content((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    is.close();
    const std::string good = "\"status\":\"ok\"";
    auto pos = content.find(good);
    REQUIRE(pos != std::string::npos);
    content.replace(pos, good.size(), "\"status\":\"xx\"");
    atomic_write(cache, content);
    SweepReport fifth = run_saturation_sweep(g, instances, opts);
    CHECK(dump_json(fourth.to_json()) == dump_json(fifth.to_json()));
    std::remove(cache.c_str());
}

TEST_CASE("type-E spot checks are flagged conjectural") {
    WeylGroup g(RootDatum::build('E', 6));
    IntWeight lam(6, Int(0));
    lam[0] = 1;
    std::vector<SweepInstance> instances{{lam, sample_elements(g, 1, 9)[0]}};
    SweepReport rep = run_saturation_sweep(g, instances, {});
    CHECK(rep.conjectural);
    CHECK(rep.failures == 0);
    Json j = rep.to_json();
    CHECK(j.at("conjectural") == Json(true));
}

TEST_CASE("property verification can ride along") {
    WeylGroup g(RootDatum::build('A', 2));
    std::vector<SweepInstance> instances;
    for (size_t w = 0; w < g.order(); ++w) instances.push_back({IntWeight{Int(1), Int(1)}, int(w)});
    SweepOptions opts;
    opts.check_property_p = true;
    SweepReport rep = run_saturation_sweep(g, instances, opts);
    CHECK(rep.failures == 0);
    CHECK(rep.property_p.size() == g.order());
}

TEST_CASE("serialization conventions") {
    CHECK(rat_to_json(Rat(3)) == Json(3));
    CHECK(rat_to_json(Rat(-7, 2)) == Json("-7/2"));
    CHECK(rat_to_string(Rat(5, 3)) == "5/3");
    CHECK(rat_from_string("5/3") == Rat(5, 3));
    CHECK(rat_from_string("-4") == Rat(-4));
    CHECK(csv_field("1,2,1") == "\"1,2,1\"");
    CHECK(csv_field("plain") == "plain");
}
