#include <doctest.h>

#include <random>
#include <sstream>

#include <chaingame/angel_devil.hpp>
#include <chaingame/angel_solver.hpp>
#include <chaingame/errors.hpp>
#include <chaingame/prefix_bridge.hpp>
#include <chaingame/robust_map.hpp>
#include <chaingame/solver.hpp>
#include <chaingame/transfer.hpp>

#include "oracles.hpp"

using namespace chaingame;

namespace {

// Random layered DAG with integer vertices; layer sizes 1, w, w, ...
std::map<int, std::vector<int>> randomDag(std::mt19937_64& rng, int layers, int width)
{
    std::map<int, std::vector<int>> adj;
    std::vector<int> prev{0};
    int next = 1;
    std::bernoulli_distribution edge(0.5);
    for (int l = 1; l < layers; ++l) {
        std::vector<int> cur;
        for (int i = 0; i < width; ++i) cur.push_back(next++);
        for (int u : prev) {
            for (int v : cur) {
                if (edge(rng)) adj[u].push_back(v);
            }
        }
        prev = cur;
    }
    return adj;
}

std::string dagJson(const std::map<int, std::vector<int>>& adj)
{
    std::ostringstream out;
    out << "{\"root\": 0, \"edges\": [";
    bool first = true;
    for (const auto& [u, vs] : adj) {
        for (int v : vs) {
            out << (first ? "" : ", ") << "[" << u << ", " << v << "]";
            first = false;
        }
    }
    out << "]}";
    return out.str();
}

// Smallest witness count over the H-edges leaving images of `region`,
// computed straight from the digraphs.
int robustDegree(const RobustMap& m, const std::vector<Vertex>& region)
{
    int least = 1 << 20;
    for (const auto& v : region) {
        const Vertex fv = m.forward(v);
        for (const auto& w : m.target->outNeighbors(fv)) {
            int count = 0;
            for (const auto& z : m.source->outNeighbors(v)) count += m.forward(z) == w;
            least = std::min(least, count);
        }
    }
    return least;
}

} // namespace

TEST_CASE("damage maps")
{
    DamageMap d;
    const Vertex v{1, 2};
    CHECK(d.damage(v) == Rational(0));
    d.add(v, Rational(1, 2));
    CHECK(d.usable(v));
    d.add(v, Rational(1, 3));
    CHECK(d.damage(v) == Rational(5, 6));
    CHECK_THROWS_AS(d.add(v, Rational(1, 2)), ContractError);
    CHECK_THROWS_AS(d.add(v, Rational(-1, 2)), ContractError);
    d.add(v, Rational(0));
    d.addClamped(v, Rational(1, 2));
    CHECK(d.damage(v) == Rational(1));
    CHECK(d.burned(v));
    d.burn(Vertex{0, 0});
    CHECK(d.burnedSet() == std::set<Vertex>{{0, 0}, {1, 2}});
}

TEST_CASE("devil actions are validated")
{
    DamageMap d;
    CHECK_THROWS_AS(applyDevilAction(d, DevilAction{{{1}, {2}}, {}}, DevilPower::burning(1)), ContractError);
    CHECK_THROWS_AS(applyDevilAction(d, DevilAction{{}, {{{1}, Rational(1)}}}, DevilPower::burning(1)), ContractError);
    CHECK_THROWS_AS(applyDevilAction(d, DevilAction{{}, {{{1}, Rational(3, 4)}, {{2}, Rational(1, 2)}}},
                                     DevilPower::fractional(Rational(1))),
                    ContractError);
    applyDevilAction(d, DevilAction{{}, {{{1}, Rational(3, 4)}, {{2}, Rational(1, 4)}}},
                     DevilPower::fractional(Rational(1)));
    CHECK(d.damage({1}) == Rational(3, 4));
    applyDevilAction(d, DevilAction{{{5}, {6}}, {}}, DevilPower::burning(2));
    CHECK(d.burned({6}));
}

TEST_CASE("digraphs and move sets")
{
    CHECK(powerMoveSet("1").size() == 8);
    CHECK(powerMoveSet("2").size() == 24);
    CHECK(powerMoveSet("wastlund").size() == 14);
    CHECK_FALSE(powerMoveSet("2").contains({0, 0}));
    CHECK(powerMoveSet("wastlund").contains({-2, 1}));
    CHECK_THROWS(powerMoveSet("7"));

    WedgeDigraph w(3);
    CHECK(w.outNeighbors({0, 1, 0}) == std::vector<Vertex>{{0, 1, 1}, {0, 2, 0}, {1, 1, 0}});
    CHECK_FALSE(w.hasVertex({0, -1, 0}));
    auto g = parseDigraph("grid:power=1");
    CHECK(g->outNeighbors({0, 0}).size() == 8);
    CHECK(parseDigraph("path")->outNeighbors({3}) == std::vector<Vertex>{{4}});
    auto e = parseDigraph(R"({"root": 0, "edges": [[0, 1], [0, 2], [1, 3]]})");
    CHECK(e->root() == Vertex{0});
    CHECK(e->outNeighbors({0}) == std::vector<Vertex>{{1}, {2}});
    CHECK(e->outNeighbors({3}).empty());
    CHECK_THROWS(parseDigraph("nope:1"));
    CHECK(reachableWithin(WedgeDigraph(2), {0, 0}, 2)
          == std::vector<Vertex>{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
    CoverDigraph c(parsePoset("wedge:d=2,k=3"));
    CHECK(c.outNeighbors({0, 1}) == std::vector<Vertex>{{0, 2}, {1, 1}});
    CHECK(c.outNeighbors({1, 1}).empty());
}

TEST_CASE("angel-devil matches")
{
    PathDigraph path;
    GreedyAngel a;
    RandomDevil d(1);
    auto r = playAngelDevil(path, a, d, 10, DevilPower::burning(1));
    CHECK(r.survived == 1);
    CHECK(r.path == std::vector<Vertex>{{0}, {1}});

    WedgeDigraph w(2);
    GreedyAngel a2;
    HistoryDevilAdapter dw(devilWedge2());
    // The observer fires after each Angel move and after each Devil turn.
    int calls = 0;
    std::size_t longest = 0;
    auto r2 = playAngelDevil(w, a2, dw, 6, DevilPower::burning(1), [&](const auto& p, const DamageMap&) {
        ++calls;
        CHECK(p.size() >= longest);
        longest = p.size();
    });
    CHECK(longest == r2.path.size());
    CHECK(calls >= r2.survived);
    CHECK(r2.path.size() == static_cast<std::size_t>(r2.survived) + 1);
    for (std::size_t i = 1; i < r2.path.size(); ++i) {
        auto outs = w.outNeighbors(r2.path[i - 1]);
        CHECK(std::find(outs.begin(), outs.end(), r2.path[i]) != outs.end());
    }
    CHECK(playAngelDevil(w, a2, dw, 0, DevilPower::burning(1)).survived == 0);
    CHECK_THROWS_AS(playAngelDevil(w, a2, dw, -1, DevilPower::burning(1)), ContractError);
}

TEST_CASE("restated wedge-2 blocker as a devil")
{
    auto d = devilWedge2();
    std::vector<Vertex> p{{0, 0}};
    CHECK(d->respond(p, {}) == Vertex{1, 1});
    p.push_back({1, 0});
    std::set<Vertex> burned{{1, 1}};
    CHECK(d->respond(p, burned) == Vertex{2, 0});
    CHECK(impliedBurned(*d, p) == std::set<Vertex>{{1, 1}, {2, 0}});
}

TEST_CASE("angel solver agrees with brute force on small DAGs")
{
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 40; ++rep) {
        auto adj = randomDag(rng, 5, 3);
        auto g = parseDigraph(dagJson(adj));
        for (int burns : {1, 2}) {
            oracle::AngelOracle o(adj, 0, burns);
            for (int h = 0; h <= 4; ++h) {
                CHECK(solveAngelSurvival(g, h, DevilPower::burning(burns)).value == o.value(h));
            }
        }
        // Whole-unit fractional damage behaves like burning.
        CHECK(solveAngelSurvival(g, 4, DevilPower::fractional(Rational(1))).value
              == solveAngelSurvival(g, 4, DevilPower::burning(1)).value);
    }
}

TEST_CASE("angel solver values")
{
    CHECK(solveAngelSurvival(std::make_shared<PathDigraph>(), 5, DevilPower::burning(1)).value == 1);
    auto w2 = std::make_shared<WedgeDigraph>(2);
    CHECK(solveAngelSurvival(w2, 0, DevilPower::burning(1)).value == 0);
    const int v = solveAngelSurvival(w2, 6, DevilPower::burning(1)).value;
    CHECK(v <= 2);
    CHECK(v == 2);
    auto g = std::make_shared<WedgeDigraph>(3);
    CHECK(solveAngelSurvival(g, 5, DevilPower::burning(1)).value >= v);
}

TEST_CASE("solver angel and worst case survival")
{
    auto w2 = std::make_shared<WedgeDigraph>(2);
    const int n = solveAngelSurvival(w2, 6, DevilPower::burning(1)).value;
    SolverAngel angel(w2, DevilPower::burning(1), 1, 6);
    auto wc = worstCaseSurvival(*w2, angel, 6, DevilPower::burning(1));
    CHECK(wc.survived == n);
    CHECK(wc.lines > 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SolverAngel a(w2, DevilPower::burning(1), 1, 6);
        RandomDevil d(seed);
        CHECK(playAngelDevil(*w2, a, d, 6, DevilPower::burning(1)).survived >= n);
    }
}

TEST_CASE("robust maps")
{
    auto grid = parseDigraph("grid:power=2");
    auto m = robustMapFromMoveSet(powerMoveSet("2"), grid);
    auto region = wedgeRegion(24, 2);
    CHECK(m.forward(Vertex(24, 0)) == Vertex{0, 0});
    CHECK(robustDegree(m, region) == 1);
    CHECK(verifyKRobust(m, 1, region).ok);
    auto bad = verifyKRobust(m, 2, region);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.counterexample.has_value());
    CHECK(static_cast<int>(m.witnesses(bad.counterexample->first, bad.counterexample->second).size()) < 2);

    for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto mm = multMap(d, k);
        auto reg = wedgeRegion(d * k, 3);
        CHECK(robustDegree(mm, reg) == k);
        CHECK(verifyKRobust(mm, k, reg).ok);
        auto fail = verifyKRobust(mm, k + 1, reg);
        CHECK_FALSE(fail.ok);
        REQUIRE(fail.counterexample.has_value());
        const auto [v, w] = *fail.counterexample;
        auto outs = mm.target->outNeighbors(mm.forward(v));
        CHECK(std::find(outs.begin(), outs.end(), w) != outs.end());
        for (const auto& z : mm.witnesses(v, w)) CHECK(mm.forward(z) == w);
    }

    CHECK(wedgeRegion(2, 2).size() == 6);
    CHECK(wedgeRegion(3, 2).size() == 10);

    auto comp = compose(multMap(4, 2), multMap(2, 2));
    CHECK(comp.robustness == 4);
    CHECK(robustDegree(comp, wedgeRegion(8, 2)) == 4);
    auto id = identityMap(std::make_shared<WedgeDigraph>(2));
    CHECK(id.forward({3, 1}) == Vertex{3, 1});
    CHECK(verifyKRobust(id, 1, wedgeRegion(2, 3)).ok);
}

TEST_CASE("identity transfer copies the inner angel")
{
    auto w2 = std::make_shared<WedgeDigraph>(2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto t = transferAngel(identityMap(w2), std::make_unique<GreedyAngel>());
        GreedyAngel plain;
        RandomDevil d1(seed);
        RandomDevil d2(seed);
        auto a = playAngelDevil(*w2, *t, d1, 8, DevilPower::burning(1));
        auto b = playAngelDevil(*w2, plain, d2, 8, DevilPower::burning(1));
        CHECK(a.path == b.path);
    }
}

TEST_CASE("transfer through a 2-robust map keeps the survival time")
{
    auto h = std::make_shared<WedgeDigraph>(2);
    auto g = std::make_shared<WedgeDigraph>(4);
    const int n = solveAngelSurvival(h, 4, DevilPower::burning(1)).value;
    auto t = transferAngel(multMap(2, 2), std::make_unique<SolverAngel>(h, DevilPower::burning(1), 1, 4));
    CHECK(worstCaseSurvival(*g, *t, 4, DevilPower::burning(1)).survived >= n);

    // Fractional damage is divided by the robustness on the way over.
    auto ft = transferAngelFractional(multMap(2, 2), std::make_unique<GreedyAngel>());
    auto* ta = dynamic_cast<TransferAngel*>(ft.get());
    REQUIRE(ta != nullptr);
    RandomDevil d(3);
    auto r = playAngelDevil(*g, *ft, d, 4, DevilPower::fractional(Rational(2)));
    for (const auto& [v, x] : ta->targetDamage().entries()) CHECK(x <= Rational(1));
    CHECK(r.survived >= 1);
    CHECK(ta->targetPath().front() == Vertex{0, 0});
}

TEST_CASE("devil blocker and angel walker")
{
    auto poset = parsePoset("wedge:d=2,k=6");
    auto board = makeBoard(poset);
    GameConfig c;
    c.variant = Variant::prefix;
    auto blocker = blockerFromDevil(devilWedge2());
    GameState s(board, c);
    s.play(Player::builder, Element{0, 0});
    CHECK(blocker->nextMove(s, Player::blocker) == Element{1, 1});
    CHECK(BlockerFromDevil::headHistory(s) == std::vector<Vertex>{{0, 0}});

    LineSearchOptions opts;
    opts.maxBuilderMoves = 6;
    c.prefixTarget = 3;
    CHECK(bestCaseForBuilder(board, *blocker, c, opts).value < 3);

    auto walker = walkerFromAngel(std::make_unique<GreedyAngel>());
    FallbackStrategy fb;
    auto end = runMatch(board, *walker, fb, c);
    CHECK(end.score() >= 1);
}
