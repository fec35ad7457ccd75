#include "doctest.h"

#include "dynchrome/constructions.hpp"
#include "dynchrome/errors.hpp"
#include "dynchrome/formulas.hpp"
#include "dynchrome/oracles.hpp"
#include "dynchrome/pipelines.hpp"
#include "test_support.hpp"

using namespace dynchrome;

namespace {

ResampleConfig seeded(uint64_t s) {
    ResampleConfig cfg;
    cfg.seed = s;
    return cfg;
}

void check_report_shape(const PipelineResult& r) {
    const RunReport& rep = r.report;
    CHECK(rep.proper);
    CHECK(rep.dynamic);
    CHECK(is_proper(r.coloring));
    CHECK(is_dynamic(r.coloring));
    CHECK(rep.colors_used == count_colors(r.coloring));
    CHECK(rep.within_bound == (rep.colors_used <= rep.bound_value));
    CHECK(static_cast<int>(rep.colors.size()) == r.coloring.graph().vertex_count());
    if (!rep.fallback_used) CHECK(rep.within_bound);
}

}  // namespace

TEST_CASE("iterated domination recolor on the 6-cycle") {
    Graph c6 = cycle(6);
    Coloring base = optimal_proper_coloring(c6);
    PipelineResult r = run_theorem3(c6, base, seeded(1));
    check_report_shape(r);
    // eta = 16, k = floor(log2(3)) + 1 = 2, bound = 2 + 16*2 + 1
    CHECK(r.report.bound_value == 35);
    CHECK(r.report.details.at("eta") == 16);
    CHECK(r.report.details.at("k") == 2);
    CHECK(r.report.oracle_values.at("alpha") == 3);
}

TEST_CASE("iterated domination recolor on the Petersen graph") {
    Graph p = petersen();
    Coloring base = optimal_proper_coloring(p);
    PipelineResult r = run_theorem3(p, base, seeded(2));
    check_report_shape(r);
    // eta = 6, k = floor(log_{6/3}(4)) + 1 = 3, bound = 3 + 6*3 + 1
    CHECK(r.report.bound_value == 22);
    CHECK(r.report.algorithm == "theorem3");
}

TEST_CASE("iterated domination recolor on a clique") {
    Graph k5 = complete(5);
    Coloring base = optimal_proper_coloring(k5);
    PipelineResult r = run_theorem3(k5, base, seeded(3));
    check_report_shape(r);
    // eta = ceil((4*16)^(1/3)) = 4, alpha = 1 so k = 1, bound = 5 + 4 + 1
    CHECK(r.report.bound_value == 10);
    CHECK(r.report.colors_used == 5);  // a clique coloring is already fine

    Graph p4 = path(4);
    CHECK_THROWS_AS(run_theorem3(p4, optimal_proper_coloring(p4), seeded(0)), InputError);
}

TEST_CASE("regular pairing algorithm routes small degrees to the exact search") {
    Graph c5 = cycle(5);
    PipelineResult r = run_theorem4(c5, optimal_proper_coloring(c5), seeded(1));
    check_report_shape(r);
    CHECK(r.report.case_label == "exact_small_degree");
    CHECK(r.report.bound_value == 6);  // chi + 3
    CHECK(r.report.colors_used == 5);

    Graph p = petersen();
    PipelineResult rp = run_theorem4(p, optimal_proper_coloring(p), seeded(1));
    check_report_shape(rp);
    CHECK(rp.report.case_label == "exact_small_degree");
    CHECK(rp.report.bound_value == 6);
    CHECK(rp.report.colors_used == 4);
}

TEST_CASE("regular pairing algorithm on higher degree") {
    Graph k5 = complete(5);
    PipelineResult r = run_theorem4(k5, optimal_proper_coloring(k5), seeded(4));
    check_report_shape(r);
    // alpha = 1: k = floor(log2(1)) + 1 = 1, bound = 5 + 2*(1-1) + 3
    CHECK(r.report.bound_value == 8);

    for (uint64_t s = 0; s < 3; ++s) {
        Graph g = random_regular(12, 4, 100 + s);
        Coloring base = optimal_proper_coloring(g);
        PipelineResult rr = run_theorem4(g, base, seeded(s));
        check_report_shape(rr);
        long long alpha = rr.report.oracle_values.at("alpha");
        long long chi = count_colors(base);
        CHECK(rr.report.bound_value ==
              chi + 2 * (floor_log_ratio(2, 1, alpha) + 1 - 1) + 3);
    }

    CHECK_THROWS_AS(run_theorem4(path(4), optimal_proper_coloring(path(4)), seeded(0)),
                    InputError);  // not regular
}

TEST_CASE("case analysis: two-chromatic graphs take the exact route") {
    Graph c4 = cycle(4);
    PipelineResult r = run_theorem5(c4, optimal_proper_coloring(c4));
    check_report_shape(r);
    CHECK(r.report.case_label == "two_chromatic_exact");
    CHECK(r.report.bound_value == 4);  // chi + alpha = 2 + 2
    CHECK(r.report.colors_used == 4);
}

TEST_CASE("case analysis: 5-cycle lands in the small-offender case") {
    Graph c5 = cycle(5);
    PipelineResult r = run_theorem5(c5, optimal_proper_coloring(c5));
    check_report_shape(r);
    CHECK(r.report.case_label == "case2_small");
    CHECK(r.report.bound_value == 6);  // chi + 3
    CHECK(r.report.colors_used == 5);
}

TEST_CASE("case analysis: cliques and singletons") {
    Graph k4 = complete(4);
    PipelineResult r = run_theorem5(k4, optimal_proper_coloring(k4));
    check_report_shape(r);
    CHECK(r.report.case_label == "complete");
    CHECK(r.report.bound_value == 6);  // chi + alpha + 1
    CHECK(r.report.colors_used == 4);

    Graph one = Graph::from_edges(1, {});
    PipelineResult s = run_theorem5(one, Coloring(one, {1}));
    CHECK(s.report.case_label == "single_color");
    CHECK(s.report.proper);
    CHECK(s.report.dynamic);

    Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(run_theorem5(two, optimal_proper_coloring(two)), InputError);
}

TEST_CASE("case analysis stays within the headline bound on the gap family") {
    Graph g = prop2_graph(3, 3);
    Coloring base = optimal_proper_coloring(g);
    PipelineResult r = run_theorem5(g, base);
    check_report_shape(r);
    long long chi = count_colors(base);
    long long alpha = r.report.oracle_values.at("alpha");
    CHECK(chi == 3);
    CHECK(alpha == 3);
    CHECK(r.report.bound_value <= chi + alpha + 1);
}

TEST_CASE("pairing phases on the 6-cycle") {
    Graph c6 = cycle(6);
    PipelineResult r = run_theorem6(c6, optimal_proper_coloring(c6), seeded(1));
    check_report_shape(r);
    // chi + ceil((alpha + omega)/2) + 3 = 2 + ceil(5/2) + 3
    CHECK(r.report.bound_value == 8);
    CHECK(r.report.details.contains("triangle_free_bound"));
    CHECK(r.report.details.at("triangle_free_bound") == 8);  // chi + ceil(alpha/2) + 4 = 2 + 2 + 4
}

TEST_CASE("pairing phases on triangle-filled and sparse graphs") {
    Graph k5 = complete(5);
    PipelineResult r = run_theorem6(k5, optimal_proper_coloring(k5), seeded(2));
    check_report_shape(r);
    CHECK(r.report.bound_value == 11);  // 5 + ceil(6/2) + 3
    CHECK_FALSE(r.report.details.contains("triangle_free_bound"));

    for (uint64_t s = 0; s < 5; ++s) {
        Graph g = testsup::random_connected(8, 300 + s);
        PipelineResult rr = run_theorem6(g, optimal_proper_coloring(g), seeded(s));
        check_report_shape(rr);
    }
}

TEST_CASE("peeling bound: exact routes for tiny and cubic cases") {
    Graph k4 = complete(4);
    PipelineResult r = run_theorem7(k4, optimal_proper_coloring(k4));
    check_report_shape(r);
    CHECK(r.report.case_label == "exact_small_degree");
    CHECK(r.report.bound_value == 4 + 2 * ceil_div(4, 3) - 2);
    CHECK(r.report.colors_used == 4);

    Graph q3 = cube_q3();
    PipelineResult rq = run_theorem7(q3, optimal_proper_coloring(q3));
    check_report_shape(rq);
    CHECK(rq.report.case_label == "complement_matching");
    CHECK(rq.report.bound_value == 2 + 2 * ceil_div(8, 3) - 2);  // 6
    CHECK(rq.report.oracle_values.at("pair_classes") == 4);
    // every color class is a complement-matched pair
    std::map<int, int> class_size;
    for (int c : rq.report.colors) class_size[c]++;
    for (auto [c, k] : class_size) CHECK(k == 2);

    Graph p = petersen();
    PipelineResult rp = run_theorem7(p, optimal_proper_coloring(p));
    check_report_shape(rp);
    CHECK(rp.report.case_label == "complement_matching");
    CHECK(rp.report.bound_value == 9);  // 3 + 2*ceil(10/3) - 2
    CHECK(rp.report.colors_used == 5);
}

TEST_CASE("peeling bound on degree at least four") {
    Graph k5 = complete(5);
    PipelineResult r = run_theorem7(k5, optimal_proper_coloring(k5));
    check_report_shape(r);
    CHECK(r.report.case_label == "peeling");
    CHECK(r.report.bound_value == 5 + 2 * ceil_div(5, 4) - 2);  // 7

    for (uint64_t s = 0; s < 3; ++s) {
        Graph g = random_regular(12, 4, 500 + s);
        Coloring base = optimal_proper_coloring(g);
        PipelineResult rr = run_theorem7(g, base);
        check_report_shape(rr);
        long long chi = count_colors(base);
        CHECK(rr.report.bound_value == chi + 2 * ceil_div(12, 4) - 2);
    }

    Graph edgeless = Graph::from_edges(4, {});
    PipelineResult re = run_theorem7(edgeless, optimal_proper_coloring(edgeless));
    CHECK(re.report.case_label == "edgeless");
    CHECK(re.report.bound_value == 1);

    CHECK_THROWS_AS(run_theorem7(path(4), optimal_proper_coloring(path(4))), InputError);
}

TEST_CASE("matched-partner recolor bound") {
    Graph c6 = matching_lower_bound_graph(3);  // the 6-cycle in disguise
    PipelineResult r = run_theorem8(c6, optimal_proper_coloring(c6));
    check_report_shape(r);
    CHECK(r.report.bound_value == 8);  // chi 2 + matching 3 + 3
    CHECK(r.report.oracle_values.at("matching") == 3);

    Graph k4 = complete(4);
    PipelineResult rk = run_theorem8(k4, optimal_proper_coloring(k4));
    check_report_shape(rk);
    CHECK(rk.report.bound_value == 9);  // 4 + 2 + 3
    CHECK(rk.report.colors_used == 4);  // clique coloring has no offenders

    Graph c5 = cycle(5);
    PipelineResult rc = run_theorem8(c5, optimal_proper_coloring(c5));
    check_report_shape(rc);
    CHECK(rc.report.bound_value == 8);  // 3 + 2 + 3
}

TEST_CASE("class splitting pipeline") {
    Graph kb = complete_bipartite(4, 4);
    Coloring base = optimal_proper_coloring(kb);
    PipelineResult r = run_lemma9(kb, base, seeded(1));
    check_report_shape(r);
    CHECK(r.report.details.at("subpalette_size") == 4);  // ceil(64^(1/3))
    CHECK(r.report.bound_value == 8);                    // 4 * 2

    Graph c6 = cycle(6);
    PipelineResult rc = run_lemma9(c6, optimal_proper_coloring(c6), seeded(2));
    check_report_shape(rc);
    CHECK(rc.report.bound_value == 32);
}

TEST_CASE("direct repair pipeline") {
    Graph c4 = cycle(4);
    Coloring base(c4, {1, 2, 1, 2});
    PipelineResult r = run_lemma6(c4, base);
    check_report_shape(r);
    CHECK(r.report.bound_value == 6);  // 2 colors + 4 offenders
    CHECK(r.report.colors_used == 4);
}

TEST_CASE("bound calculator on the Petersen graph") {
    RunReport rep = bound_report(petersen());
    CHECK(rep.algorithm == "bounds");
    CHECK(rep.within_bound);
    const auto& bounds = rep.details.at("bounds");
    std::map<std::string, nlohmann::json> by_name;
    for (const auto& b : bounds) by_name[b.at("name")] = b;

    CHECK(by_name.at("theorem1").at("value") == 4);
    CHECK(by_name.at("theorem1").at("applies") == true);
    CHECK(by_name.at("theorem3").at("value") == 19);
    CHECK(by_name.at("theorem4").at("value") == 7);
    CHECK(by_name.at("theorem5").at("value") == 5);
    CHECK(by_name.at("theorem6").at("value") == 6);
    CHECK(by_name.at("theorem7").at("value") == 6);
    CHECK(by_name.at("theorem8").at("value") == 8);
    CHECK(by_name.at("corollary2").at("value") == 7);
    CHECK(by_name.at("corollary3").at("value") == 6);
    CHECK(by_name.at("lemma9").at("value") == 18);
    CHECK(by_name.at("corollary1").at("applies") == false);

    CHECK(rep.oracle_values.at("chi") == 3);
    CHECK(rep.oracle_values.at("chi2") == 4);
    CHECK(rep.details.at("observed_difference") == 1);
}

TEST_CASE("bound calculator respects the degree-three exception") {
    RunReport rep = bound_report(cycle(5));
    const auto& bounds = rep.details.at("bounds");
    for (const auto& b : bounds)
        if (b.at("name") == "theorem1") {
            CHECK(b.at("value") == 5);  // the one exceptional graph
            CHECK(b.at("applies") == true);
        }
    RunReport rep7 = bound_report(cycle(7));
    for (const auto& b : rep7.details.at("bounds"))
        if (b.at("name") == "theorem1") CHECK(b.at("value") == 4);
}

TEST_CASE("bound calculator degrades to a partial report under budget") {
    OracleBudget tiny;
    tiny.max_nodes = 2;
    RunReport rep = bound_report(petersen(), tiny);
    CHECK(rep.details.contains("omitted_oracles"));
    CHECK(!rep.details.at("omitted_oracles").empty());
}

TEST_CASE("identical seeds give byte-identical reports") {
    Graph p = petersen();
    Coloring base = optimal_proper_coloring(p);
    PipelineResult a = run_theorem6(p, base, seeded(9));
    PipelineResult b = run_theorem6(p, base, seeded(9));
    CHECK(report_to_json(a.report).dump() == report_to_json(b.report).dump());
    CHECK(a.coloring == b.coloring);

    PipelineResult c = run_theorem3(p, base, seeded(10));
    PipelineResult d = run_theorem3(p, base, seeded(10));
    CHECK(report_to_json(c.report).dump() == report_to_json(d.report).dump());
}

TEST_CASE("timing shows up only when asked for") {
    RunReport rep = bound_report(cycle(4));
    nlohmann::json without = report_to_json(rep);
    CHECK_FALSE(without.contains("wall_time_ms"));
    nlohmann::json with = report_to_json(rep, true);
    CHECK(with.contains("wall_time_ms"));
}

TEST_CASE("dispatch by name") {
    Graph c6 = cycle(6);
    Coloring base = optimal_proper_coloring(c6);
    for (const auto& name : algorithm_names()) {
        PipelineResult r = run_algorithm(name, c6, base, seeded(3), {});
        CHECK(r.report.algorithm == name);  // the 6-cycle qualifies for all of them
    }
    CHECK_THROWS_AS(run_algorithm("theorem9", c6, base, seeded(0), {}), InputError);
}

TEST_CASE("every pipeline handles a random connected corpus") {
    for (uint64_t s = 0; s < 8; ++s) {
        Graph g = testsup::random_connected(7, 4000 + s);
        Coloring base = optimal_proper_coloring(g);
        auto [lo, hi] = min_max_degree(g);
        PipelineResult r5 = run_theorem5(g, base);
        check_report_shape(r5);
        PipelineResult r6 = run_theorem6(g, base, seeded(s));
        check_report_shape(r6);
        PipelineResult r8 = run_theorem8(g, base);
        check_report_shape(r8);
        if (lo >= 2) {
            PipelineResult r3 = run_theorem3(g, base, seeded(s));
            check_report_shape(r3);
            PipelineResult r9 = run_lemma9(g, base, seeded(s));
            check_report_shape(r9);
        }
        PipelineResult rl6 = run_lemma6(g, base);
        check_report_shape(rl6);
    }
}
