#include <doctest.h>

#include <cmath>

#include <chaingame/potential.hpp>
#include <chaingame/strategies.hpp>

#include "oracles.hpp"

using namespace chaingame;

namespace {

GameConfig cfg(Variant v, int bias = 1, Player first = Player::builder)
{
    GameConfig c;
    c.variant = v;
    c.bias = bias;
    c.firstPlayer = first;
    return c;
}

int ceilDiv(int a, int b) { return (a + b - 1) / b; }

// Every Blocker line against a fixed builder, without memoization.
int worstOverBlockers(const GameState& s, const Strategy& builder)
{
    if (s.terminal()) return s.score();
    if (s.toMove() == Player::builder) {
        auto b = builder.clone();
        GameState next = s;
        next.play(Player::builder, b->nextMove(s, Player::builder));
        return worstOverBlockers(next, *b);
    }
    int worst = 1 << 20;
    for (int i : s.legalMoveIndices(Player::blocker)) {
        GameState next = s;
        next.playIndex(Player::blocker, i);
        worst = std::min(worst, worstOverBlockers(next, builder));
    }
    return worst;
}

// Every builder line against a fixed Blocker; `leaf` sees finished games.
template <class Leaf>
int bestOverBuilders(const GameState& s, const Strategy& blocker, Leaf&& leaf)
{
    if (s.terminal()) {
        leaf(s);
        return s.score();
    }
    if (s.toMove() == Player::blocker) {
        auto b = blocker.clone();
        GameState next = s;
        next.play(Player::blocker, b->nextMove(s, Player::blocker));
        return bestOverBuilders(next, *b, leaf);
    }
    int best = -1;
    for (int i : s.legalMoveIndices(Player::builder)) {
        GameState next = s;
        next.playIndex(Player::builder, i);
        best = std::max(best, bestOverBuilders(next, blocker, leaf));
    }
    return best;
}

oracle::Fraction toFraction(const DyadicRational& x)
{
    return oracle::Fraction(static_cast<long long>(x.numerator()), 1LL << x.exponent());
}

} // namespace

TEST_CASE("hypercube step takes the smallest uncovered free axis")
{
    auto all = [](const Element&) { return true; };
    CHECK(hypercubeStep(3, Element{0, 0, 0}, {}, all) == Element{1, 0, 0});
    std::vector<Element> blockers{{1, 0, 0}};
    CHECK(hypercubeStep(3, Element{0, 0, 0}, blockers, [&](const Element& x) { return x != blockers[0]; })
          == Element{0, 1, 0});
    blockers = {{1, 1, 0}};
    CHECK(hypercubeStep(3, Element{0, 0, 0}, blockers, all) == Element{0, 0, 1});
    CHECK_FALSE(hypercubeStep(3, Element{1, 1, 0}, {}, all).has_value());
}

TEST_CASE("hypercube walker scores d-1 against every Blocker")
{
    for (int d = 2; d <= 4; ++d) {
        auto board = makeBoard(std::make_shared<HypercubeInterior>(d));
        HypercubeWalker w(d);
        GameState s(board, cfg(Variant::ordered, 1, Player::blocker));
        CHECK(worstOverBlockers(s, w) == d - 1);
    }
}

TEST_CASE("hypercube walker against random Blockers")
{
    for (int d = 5; d <= 8; ++d) {
        auto board = makeBoard(std::make_shared<HypercubeInterior>(d));
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            HypercubeWalker w(d);
            LocalRandomBlocker b(seed);
            CHECK(runMatch(board, w, b, cfg(Variant::ordered, 1, Player::blocker)).score() == d - 1);
        }
    }
}

TEST_CASE("pairing mates along the longest axis")
{
    ChainProduct p({2, 5});
    ProductBreakerPairing pairing(p);
    for (const auto& x : p.elements()) {
        auto m = pairing.mate(x);
        if (x[1] == 4) {
            CHECK_FALSE(m.has_value());
            continue;
        }
        REQUIRE(m.has_value());
        CHECK((*m)[0] == x[0]);
        CHECK(std::abs((*m)[1] - x[1]) == 1);
        CHECK(std::min((*m)[1], x[1]) % 2 == 0);
        CHECK(pairing.mate(*m) == x);
    }
}

TEST_CASE("product strategies bracket the value on small products")
{
    for (auto sizes : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
        auto product = std::make_shared<ChainProduct>(sizes);
        auto board = makeBoard(product);
        const int formula = product->maxChainSize() - product->maxFactor() / 2;
        ProductMaker maker(*product);
        GameState s(board, cfg(Variant::unordered));
        CHECK(worstOverBlockers(s, maker) >= formula);
        ProductBreakerPairing breaker(*product);
        CHECK(bestOverBuilders(s, breaker, [](const GameState&) {}) <= formula);
    }
}

TEST_CASE("wedge-2 strategies against every opponent")
{
    for (int k = 1; k <= 5; ++k) {
        auto board = makeBoard("wedge:d=2,k=" + std::to_string(k));
        GameState s(board, cfg(Variant::ordered));
        Wedge2Walker w;
        CHECK(worstOverBlockers(s, w) >= ceilDiv(2 * k, 3));
        Wedge2Blocker b;
        int lines = 0;
        const int best = bestOverBuilders(s, b, [&](const GameState& end) {
            ++lines;
            std::vector<int> levels;
            for (int i : end.builderOrder()) levels.push_back(end.board().level(i));
            for (std::size_t i = 2; i < levels.size(); ++i) {
                CHECK_FALSE((levels[i - 2] + 1 == levels[i - 1] && levels[i - 1] + 1 == levels[i]));
            }
        });
        CHECK(best <= ceilDiv(2 * k, 3));
        CHECK(lines > 0);
    }
}

TEST_CASE("wedge-2 blocker answers")
{
    auto board = makeBoard("wedge:d=2,k=6");
    GameState s(board, cfg(Variant::ordered));
    Wedge2Blocker b;
    s.play(Player::builder, Element{0, 0});
    CHECK(b.nextMove(s, Player::blocker) == Element{1, 1});
    s.play(Player::blocker, Element{1, 1});
    s.play(Player::builder, Element{1, 0});
    // (1,1) is taken, so Blocker takes the other successor.
    CHECK(b.nextMove(s, Player::blocker) == Element{2, 0});
}

TEST_CASE("greedy successor blocker burns the greedy move")
{
    auto board = makeBoard("wedge:d=2,k=5");
    GameState s(board, cfg(Variant::ordered));
    s.play(Player::builder, Element{0, 1});
    GreedySuccessorBlocker g;
    CHECK(g.nextMove(s, Player::blocker) == Element{0, 2});
}

TEST_CASE("lifted blocker burns above the head first")
{
    auto poset = parsePoset("wedge:d=3,k=6");
    auto c = cfg(Variant::prefix, 2);
    auto lift = makeStrategy("lift:wedge2-blocker", *poset, c);
    GameState s(makeBoard(poset), c);
    s.play(Player::builder, Element{0, 0, 0});
    CHECK(lift->nextMove(s, Player::blocker) == Element{0, 0, 1});
    s.play(Player::blocker, Element{0, 0, 1});
    const Element second = lift->nextMove(s, Player::blocker);
    CHECK(second[2] == 0);
    CHECK(second == Element{1, 1, 0});
}

TEST_CASE("bias-3 blocker responses stay legal")
{
    auto board = makeBoard("wedge:d=5,k=5");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomStrategy walker(seed);
        Wedge5Bias3Blocker blocker;
        auto end = runMatch(board, walker, blocker, cfg(Variant::ordered, 3));
        CHECK(end.score() <= 5);
    }
    GameState s(board, cfg(Variant::ordered, 3));
    s.play(Player::builder, Element{0, 0, 0, 0, 0});
    CHECK_FALSE(Wedge5Bias3Blocker::responses(s).empty());
}

TEST_CASE("binomials and influence")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            for (int c = 0; c <= 7; ++c) {
                for (int d = 0; d <= 7; ++d) {
                    CHECK(toFraction(influence(a, b, c, d)) == oracle::walkProbability(a, b, c, d));
                }
            }
        }
    }
    CHECK(influence(Element{1, 1}, Element{1, 1}) == DyadicRational(1));
    CHECK(influence(Element{2, 1}, Element{1, 3}).isZero());
}

TEST_CASE("martingale identity of the influence")
{
    // f(a,b) = (f(a+1,b) + f(a,b+1)) / 2 whenever (a,b) != (c,d).
    for (int a = 0; a <= 6; ++a) {
        for (int b = 0; b <= 6; ++b) {
            for (int c = 0; c <= 8; ++c) {
                for (int d = 0; d <= 8; ++d) {
                    if (a == c && b == d) continue;
                    CHECK(influence(a, b, c, d) == (influence(a + 1, b, c, d) + influence(a, b + 1, c, d)).half());
                }
            }
        }
    }
}

TEST_CASE("dyadic arithmetic matches rationals")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(-1000, 1000);
    std::uniform_int_distribution<unsigned> ex(0, 12);
    for (int rep = 0; rep < 2000; ++rep) {
        DyadicRational x(num(rng), ex(rng));
        DyadicRational y(num(rng), ex(rng));
        CHECK(toFraction(x + y) == toFraction(x) + toFraction(y));
        CHECK(toFraction(x - y) == toFraction(x) - toFraction(y));
        CHECK(toFraction(x.half()) == toFraction(x) / 2);
        CHECK((x < y) == (toFraction(x) < toFraction(y)));
        CHECK((x == y) == (toFraction(x) == toFraction(y)));
        CHECK(x.toDouble() == doctest::Approx(boost::rational_cast<double>(toFraction(x))));
        if (x.exponent() > 0) CHECK(x.numerator() % 2 != 0);
    }
    CHECK(DyadicRational(7, 3).str() == "7/8");
    CHECK(DyadicRational(12, 2).str() == "3");
    CHECK(DyadicRational(-2, 2).str() == "-1/2");
    CHECK(DyadicRational(0, 5).exponent() == 0);
}

TEST_CASE("outside cells and the initial potential")
{
    for (int k = 1; k <= 12; ++k) {
        auto cells = outsideCells(k);
        CHECK(static_cast<int>(cells.size()) == k * (k + 1));
        oracle::Fraction total(0);
        for (int c = 0; c <= 2 * k; ++c) {
            for (int d = 0; c + d <= 2 * k; ++d) {
                if (c > k || d > k) total += oracle::walkProbability(0, 0, c, d);
            }
        }
        CHECK(toFraction(initialOutsidePotential(k)) == total);
    }
    CHECK(initialOutsidePotential(1) == DyadicRational(1, 1));
    CHECK(initialOutsidePotential(2) == DyadicRational(7, 3));
    CHECK(initialPotentialBound(2) == doctest::Approx(4 * std::sqrt(2 * std::log(2.0))));
}

TEST_CASE("grid potential counts outside cells as blocked")
{
    const int k = 4;
    GridPotential pot(k);
    std::vector<Element> inside{{1, 2}, {3, 3}, {4, 0}};
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; b <= k; ++b) {
            oracle::Fraction want(0);
            for (const auto& x : inside) want += oracle::walkProbability(a, b, x[0], x[1]);
            for (const auto& x : outsideCells(k)) want += oracle::walkProbability(a, b, x[0], x[1]);
            CHECK(toFraction(pot.at(inside, Element{a, b})) == want);
        }
    }
    CHECK(pot.inGrid(Element{4, 4}));
    CHECK_FALSE(pot.inGrid(Element{5, 0}));
}

TEST_CASE("grid potential walker keeps the potential in check")
{
    for (int k : {4, 6, 8}) {
        auto poset = parsePoset("wedge:d=2,k=" + std::to_string(2 * k + 1));
        auto board = makeBoard(poset);
        auto c = cfg(Variant::ordered);
        c.initialBlockerSet = outsideCells(k);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            GridPotentialWalker walker(k);
            LocalRandomBlocker blocker(seed);
            std::optional<DyadicRational> before;
            runMatch(board, walker, blocker, c, [&](const GameState& s, Player p, const Element& x) {
                if (!s.head()) return;
                std::vector<Element> grid;
                for (const auto& b : s.blockerSet()) {
                    if (walker.potential().inGrid(b)) grid.push_back(b);
                }
                if (p == Player::blocker && walker.potential().inGrid(*s.head())) {
                    auto after = grid;
                    after.push_back(x);
                    const auto inc = walker.potential().at(after, *s.head()) - walker.potential().at(grid, *s.head());
                    CHECK(inc <= DyadicRational(1, 1));
                }
            });
            GridPotentialWalker w2(k);
            LocalRandomBlocker b2(seed);
            const int score = runMatch(board, w2, b2, c).score();
            CHECK(score >= 1);
            CHECK(score <= 2 * k + 1);
        }
    }
}
