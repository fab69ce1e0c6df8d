#include <doctest.h>

#include <json.hpp>

#include <chaingame/angel_solver.hpp>
#include <chaingame/prefix_bridge.hpp>
#include <chaingame/robust_map.hpp>
#include <chaingame/solver.hpp>
#include <chaingame/strategies.hpp>
#include <chaingame/transcript.hpp>
#include <chaingame/transfer.hpp>
#include <chaingame/verify.hpp>

using namespace chaingame;
using json = nlohmann::json;

namespace {

GameConfig cfg(Variant v, int bias = 1)
{
    GameConfig c;
    c.variant = v;
    c.bias = bias;
    return c;
}

} // namespace

TEST_CASE("play, serialize and replay across strategies")
{
    auto poset = parsePoset("wedge:d=2,k=9");
    Wedge2Walker walker;
    Wedge2Blocker blocker;
    const auto t = playMatch(poset, walker, blocker, cfg(Variant::ordered));
    CHECK(t.score == 6);
    const auto text = toJson(t);
    const auto back = transcriptFromJson(text);
    CHECK(toJson(back) == text);
    CHECK(replay(back).score() == t.score);

    auto j = json::parse(text);
    std::swap(j["moves"][0], j["moves"][1]);
    CHECK_THROWS_AS(replay(transcriptFromJson(j.dump())), RefereeError);
}

TEST_CASE("solver records agree with the bundled table")
{
    const auto& table = SolvedTable::bundled();
    for (auto [desc, v] : {std::pair{"product:3x3", Variant::unordered}, std::pair{"wedge:d=2,k=6", Variant::ordered}}) {
        auto p = parsePoset(desc);
        const auto c = cfg(v);
        const auto rec = json::parse(solveRecordJson(desc, c, solveValue(*p, c)));
        CHECK(table.value({{"instance", rec["instance"]}, {"variant", rec["variant"]}}) == rec["value"].get<int>());
    }
}

TEST_CASE("angel value matches the prefix game on the 2-wedge")
{
    auto h = std::make_shared<WedgeDigraph>(2);
    const int n = solveAngelSurvival(h, 6, DevilPower::burning(1)).value;
    CHECK(n == 2);
    for (bool back : {false, true}) {
        auto c = cfg(Variant::prefix);
        c.prefixBacktrack = back;
        CHECK(solvePrefix(Wedge(2, 6), n, c).value == 1);
        CHECK(solvePrefix(Wedge(2, 6), n + 1, c).value == 0);
    }
}

TEST_CASE("transferred angels survive through composed maps")
{
    auto h = std::make_shared<WedgeDigraph>(2);
    const int n = solveAngelSurvival(h, 4, DevilPower::burning(1)).value;
    auto map = multMap(2, 2);
    auto angel = transferAngel(map, std::make_unique<SolverAngel>(h, DevilPower::burning(1), 1, 4));
    CHECK(worstCaseSurvival(*map.source, *angel, n, DevilPower::burning(1)).survived >= n);

    // The prefix Blocker built from the wedge Devil holds Walker below 3.
    auto c = cfg(Variant::prefix);
    c.prefixTarget = 3;
    auto blocker = blockerFromDevil(devilWedge2());
    LineSearchOptions lo;
    lo.maxBuilderMoves = 8;
    CHECK(bestCaseForBuilder(makeBoard("wedge:d=2,k=8"), *blocker, c, lo).value < 3);
}

TEST_CASE("quick verification bundles pass")
{
    for (const char* id : {"chainprod", "hypercube", "wedge2", "movetrick", "mult", "kmap", "gap", "mb-ad-equiv"}) {
        const auto report = runVerification(id);
        INFO(report.text());
        CHECK(report.passed());
        CHECK_FALSE(report.checks.empty());
    }
    CHECK_THROWS_AS(runVerification("nope"), ConfigError);
}
