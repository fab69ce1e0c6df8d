// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <chaingame/angel_solver.hpp>
#include <chaingame/potential.hpp>
#include <chaingame/prefix_bridge.hpp>
#include <chaingame/robust_map.hpp>
#include <chaingame/solver.hpp>
#include <chaingame/strategies.hpp>
#include <chaingame/transcript.hpp>
#include <chaingame/transfer.hpp>
#include <chaingame/verify.hpp>

#include "oracles.hpp"

using namespace chaingame;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<bool(std::ostringstream&)>& body)
{
    std::ostringstream detail;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << ": " << detail.str() << " ["
              << std::fixed << std::setprecision(1) << since(t0) << " s]" << std::endl;
}

GameConfig cfg(Variant v, int bias = 1, Player first = Player::builder)
{
    GameConfig c;
    c.variant = v;
    c.bias = bias;
    c.firstPlayer = first;
    return c;
}

int ceilDiv(int a, int b) { return (a + b - 1) / b; }

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
        if (worst == 0) break;
    }
    return worst;
}

int bestOverBuilders(const GameState& s, const Strategy& blocker, const std::function<void(const GameState&)>& leaf = {})
{
    if (s.terminal()) {
        if (leaf) leaf(s);
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

int productFormula(const std::vector<int>& sizes)
{
    int longest = 1;
    int r = 0;
    for (int s : sizes) {
        longest += s - 1;
        r = std::max(r, s);
    }
    return longest - r / 2;
}

std::string sizesStr(const std::vector<int>& sizes)
{
    std::string out;
    for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "x" : "") + std::to_string(sizes[i]);
    return out;
}

const std::vector<std::vector<int>> products{{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 4}};

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

struct GridRun {
    int score = 0;
    int skips = 0;
    int walkerChecks = 0;
    int blockerChecks = 0;
    int violations = 0;
    std::string first;
};

// Potentials recomputed from scratch over every Blocker cell, outside cells
// included, at each move.
GridRun gridRun(int k, Strategy& blocker)
{
    auto c = cfg(Variant::ordered);
    c.initialBlockerSet = outsideCells(k);
    auto board = makeBoard(std::make_shared<Wedge>(2, 2 * k + 1));
    GridPotentialWalker walker(k);
    GridRun run;
    auto fail = [&](const std::string& what) {
        if (run.violations++ == 0) run.first = what;
    };
    const DyadicRational half = DyadicRational(1).half();
    run.score = runMatch(board, walker, blocker, c, [&](const GameState& s, Player p, const Element& x) {
                    const auto head = s.head();
                    if (!head) return;
                    auto blocked = s.blockerSet();
                    const auto before = potential(blocked, *head);
                    if (p == Player::blocker) {
                        ++run.blockerChecks;
                        blocked.push_back(x);
                        const auto inc = potential(blocked, *head) - before;
                        if (inc > half) fail("Blocker increment " + inc.str());
                        return;
                    }
                    ++run.walkerChecks;
                    const int skipped = x.sum() - head->sum() - 1;
                    const auto drop = before - potential(blocked, x);
                    if (skipped > 0) {
                        ++run.skips;
                        if (drop < DyadicRational(skipped)) fail("skip with drop " + drop.str());
                    } else {
                        if (drop.sign() < 0) fail("non-skip raised potential by " + (-drop).str());
                        if (drop >= DyadicRational(1)) fail("drop " + drop.str() + " without a skip");
                    }
                }).score();
    return run;
}

} // namespace

int main()
{
    const auto start = Clock::now();

    criterion(1, "chain-product values", [](std::ostringstream& out) {
        bool ok = true;
        for (const auto& sizes : products) {
            ChainProduct p(sizes);
            const auto t0 = Clock::now();
            const int v = solveUnorderedValue(p, cfg(Variant::unordered)).value;
            const double secs = since(t0);
            const int brute = oracle::Minimax(p.elements(), oracle::Rules::unordered, 1, false).value();
            const int want = productFormula(sizes);
            ok = ok && v == want && brute == want && secs < 300;
            out << sizesStr(sizes) << " solver " << v << " brute force " << brute << " formula " << want << "; ";
        }
        return ok;
    });

    criterion(2, "product strategy sandwich", [](std::ostringstream& out) {
        bool ok = true;
        for (const auto& sizes : products) {
            auto p = std::make_shared<ChainProduct>(sizes);
            auto board = makeBoard(p);
            const int want = productFormula(sizes);
            ProductMaker maker(*p);
            ProductBreakerPairing breaker(*p);
            GameState s(board, cfg(Variant::unordered));
            const int lower = worstOverBlockers(s, maker);
            const int upper = bestOverBuilders(s, breaker);
            const int libLower = worstCaseForBuilder(board, maker, cfg(Variant::unordered)).value;
            const int libUpper = bestCaseForBuilder(board, breaker, cfg(Variant::unordered)).value;
            const int v = solveUnorderedValue(*p, cfg(Variant::unordered)).value;
            ok = ok && lower == want && upper == want && libLower == lower && libUpper == upper && v == want;
            out << sizesStr(sizes) << " maker " << lower << " <= " << v << " <= breaker " << upper << "; ";
        }
        return ok;
    });

    criterion(3, "hypercube walker scores d-1 with Blocker first", [](std::ostringstream& out) {
        bool ok = true;
        for (int d = 2; d <= 4; ++d) {
            auto board = makeBoard(std::make_shared<HypercubeInterior>(d));
            HypercubeWalker w(d);
            const auto c = cfg(Variant::ordered, 1, Player::blocker);
            const int worst = worstOverBlockers(GameState(board, c), w);
            ok = ok && worst == d - 1;
            out << "d=" << d << " worst " << worst << "; ";
        }
        int bad = 0;
        int matches = 0;
        for (int d = 2; d <= 10; ++d) {
            auto board = makeBoard(std::make_shared<HypercubeInterior>(d));
            for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
                HypercubeWalker w(d);
                RandomStrategy b(seed * 31 + static_cast<std::uint64_t>(d));
                bad += runMatch(board, w, b, cfg(Variant::ordered, 1, Player::blocker)).score() != d - 1;
                ++matches;
            }
        }
        out << matches << " random matches for d<=10, " << bad << " failures";
        return ok && bad == 0;
    });

    criterion(4, "wedge-2 value and strategies", [](std::ostringstream& out) {
        bool ok = true;
        out << "values";
        for (int k = 1; k <= 6; ++k) {
            const int v = solveOrderedValue(Wedge(2, k), cfg(Variant::ordered)).value;
            ok = ok && v == ceilDiv(2 * k, 3);
            out << " " << v;
        }
        out << "; walker worst";
        int lines = 0;
        int streaks = 0;
        for (int k = 1; k <= 6; ++k) {
            auto board = makeBoard(std::make_shared<Wedge>(2, k));
            GameState s(board, cfg(Variant::ordered));
            Wedge2Walker w;
            const int worst = worstOverBlockers(s, w);
            ok = ok && worst >= ceilDiv(2 * k, 3);
            out << " " << worst;
            Wedge2Blocker b;
            bestOverBuilders(s, b, [&](const GameState& end) {
                ++lines;
                std::set<int> won;
                for (int i : end.builderOrder()) won.insert(end.board().level(i));
                for (int L : won) streaks += won.count(L + 1) && won.count(L + 2);
            });
        }
        int low = 0;
        for (int k = 1; k <= 60; ++k) {
            auto board = makeBoard(std::make_shared<Wedge>(2, k));
            for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
                Wedge2Walker w;
                RandomStrategy b(seed * 7 + static_cast<std::uint64_t>(k) * 100003);
                low += runMatch(board, w, b, cfg(Variant::ordered)).score() < ceilDiv(2 * k, 3);
            }
        }
        out << "; " << low << " of 60000 random matches below ceil(2k/3); " << lines
            << " Walker lines under the blocker, " << streaks << " with three consecutive levels";
        return ok && low == 0 && streaks == 0 && lines > 0;
    });

    criterion(5, "potential strategy on the grid", [](std::ostringstream& out) {
        bool ok = true;
        for (int k : {10, 20, 40}) {
            const int target = static_cast<int>(std::ceil(2.0 / 3.0 * (2 * k + 1) - 4 * std::sqrt(k * std::log(k))));
            std::vector<std::unique_ptr<Strategy>> blockers;
            blockers.push_back(std::make_unique<RandomStrategy>(static_cast<std::uint64_t>(k) + 11));
            blockers.push_back(std::make_unique<GreedySuccessorBlocker>());
            blockers.push_back(std::make_unique<Wedge2Blocker>());
            out << "k=" << k << " target " << target << ":";
            for (auto& b : blockers) {
                const auto r = gridRun(k, *b);
                ok = ok && r.score >= target && r.violations == 0;
                out << " " << r.score << " (" << r.skips << " skips, " << r.walkerChecks + r.blockerChecks
                    << " moves checked, " << r.violations << " violations" << (r.first.empty() ? "" : ": " + r.first)
                    << ")";
            }
            out << "; ";
        }
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> coord(-12, 12);
        int mismatches = 0;
        for (int i = 0; i < 10000; ++i) {
            const int a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
            if (a == c && b == d) continue;
            const auto lhs = influence(a, b, c, d);
            mismatches += lhs != (influence(a + 1, b, c, d) + influence(a, b + 1, c, d)).half();
            const auto exact = oracle::walkProbability(a, b, c, d);
            mismatches += oracle::Fraction(static_cast<long long>(lhs.numerator()), 1LL << lhs.exponent()) != exact;
        }
        out << "martingale: 10000 random triples, " << mismatches << " mismatches";
        return ok && mismatches == 0;
    });

    criterion(6, "initial potential", [](std::ostringstream& out) {
        bool ok = true;
        double ratio = 0;
        for (int k = 2; k <= 200; ++k) {
            const double bound = 4 * std::sqrt(k * std::log(static_cast<double>(k)));
            const double v = initialOutsidePotential(k).toDouble();
            ok = ok && v < bound + 1e-9;
            ratio = std::max(ratio, v / bound);
        }
        int exactChecked = 0;
        for (int k = 2; k <= 20; ++k) {
            oracle::Fraction total(0);
            for (int c = 0; c <= 2 * k; ++c) {
                for (int d = 0; c + d <= 2 * k; ++d) {
                    if (c > k || d > k) total += oracle::walkProbability(0, 0, c, d);
                }
            }
            const auto v = initialOutsidePotential(k);
            ok = ok && oracle::Fraction(static_cast<long long>(v.numerator()), 1LL << v.exponent()) == total;
            ++exactChecked;
        }
        const auto two = initialOutsidePotential(2);
        out << "value(2) = " << two.str() << ", largest value/bound " << ratio << ", brute force agrees for "
            << exactChecked << " values of k";
        return ok && two == DyadicRational(7, 3);
    });

    criterion(7, "robust maps", [](std::ostringstream& out) {
        bool ok = true;
        auto check = [&](const RobustMap& m, int k, const std::vector<Vertex>& region, const std::string& label) {
            const int degree = robustDegree(m, region);
            const auto pass = verifyKRobust(m, k, region);
            const auto fail = verifyKRobust(m, k + 1, region);
            bool counter = false;
            if (fail.counterexample) {
                const auto& [v, w] = *fail.counterexample;
                int count = 0;
                for (const auto& z : m.source->outNeighbors(v)) count += m.forward(z) == w;
                counter = count < k + 1;
            }
            ok = ok && degree == k && pass.ok && !fail.ok && counter;
            out << label << " degree " << degree << ", " << k << "-robust " << (pass.ok ? "yes" : "no") << ", "
                << k + 1 << "-robust " << (fail.ok ? "yes" : "no");
            if (fail.counterexample) {
                out << " (" << vertexStr(fail.counterexample->first) << " -> "
                    << vertexStr(fail.counterexample->second) << ")";
            }
            out << "; ";
        };
        check(robustMapFromMoveSet(powerMoveSet("2"), parseDigraph("grid:power=2")), 1, wedgeRegion(24, 3), "power-2");
        for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
            check(multMap(d, k), k, wedgeRegion(d * k, 4), "mult(" + std::to_string(d) + "," + std::to_string(k) + ")");
        }
        return ok;
    });

    criterion(8, "transfer preservation", [](std::ostringstream& out) {
        auto h = std::make_shared<WedgeDigraph>(2);
        auto map = multMap(2, 2);
        const int n = solveAngelSurvival(h, 6, DevilPower::burning(1)).value;
        auto angel = transferAngel(map, std::make_unique<SolverAngel>(h, DevilPower::burning(1), 1, 6));
        const auto wc = worstCaseSurvival(*map.source, *angel, n, DevilPower::burning(1));
        const int nf = solveAngelSurvival(h, 6, DevilPower::fractional(1), 2).value;
        auto fangel =
            transferAngelFractional(map, std::make_unique<SolverAngel>(h, DevilPower::fractional(1), 4, 6));
        const auto fwc = worstCaseSurvival(*map.source, *fangel, nf, DevilPower::fractional(2), 2);
        out << "burning: n* = " << n << ", transferred Angel survives " << wc.survived << " over " << wc.lines
            << " Devil lines; fractional (granularity 1/2, budget 1 -> 2): n* = " << nf << ", survives "
            << fwc.survived << " over " << fwc.lines << " lines";
        return n >= 1 && wc.survived >= n && nf >= 1 && fwc.survived >= nf;
    });

    criterion(9, "devil strategy as a prefix Blocker", [](std::ostringstream& out) {
        bool ok = true;
        auto board = makeBoard("wedge:d=2,k=8");
        for (bool back : {false, true}) {
            auto c = cfg(Variant::prefix);
            c.prefixTarget = 3;
            c.prefixBacktrack = back;
            auto blocker = blockerFromDevil(devilWedge2());
            LineSearchOptions lo;
            lo.maxBuilderMoves = 8;
            const auto t0 = Clock::now();
            const int lib = bestCaseForBuilder(board, *blocker, c, lo).value;
            const double secs = since(t0);
            const int brute = bestOverBuilders(GameState(board, c), *blocker);
            ok = ok && lib < 3 && brute < 3 && secs < 60;
            out << (back ? "backtracking" : "head only") << ": best prefix " << lib << " (plain enumeration " << brute
                << "); ";
        }
        return ok;
    });

    criterion(10, "bias-3 Blocker on the 5-wedge", [](std::ostringstream& out) {
        Wedge5Bias3Blocker blocker;
        const auto t0 = Clock::now();
        auto r = bestCaseForBuilder(makeBoard(std::make_shared<Wedge>(5, 10)), blocker, cfg(Variant::ordered, 3));
        const double secs = since(t0);
        out << "best Walker " << r.value << " of 10 levels, " << r.nodes << " nodes";
        return r.value <= 8 && secs < 600;
    });

    criterion(11, "lifted Blocker in the 4-prefix game", [](std::ostringstream& out) {
        bool ok = true;
        auto poset = std::make_shared<Wedge>(3, 6);
        auto board = makeBoard(poset);
        for (bool back : {false, true}) {
            auto c = cfg(Variant::prefix, 2);
            c.prefixTarget = 4;
            c.prefixBacktrack = back;
            auto blocker = makeStrategy("lift:wedge2-blocker", *poset, c);
            LineSearchOptions lo;
            lo.maxBuilderMoves = 6;
            const int lib = bestCaseForBuilder(board, *blocker, c, lo).value;
            const int brute = bestOverBuilders(GameState(board, c), *blocker);
            ok = ok && lib < 4 && brute < 4;
            out << (back ? "backtracking" : "head only") << ": best prefix " << lib << " (plain enumeration " << brute
                << "); ";
        }
        return ok;
    });

    criterion(12, "determinism and full verification", [&](std::ostringstream& out) {
        int replays = 0;
        int mismatched = 0;
        const std::vector<std::string> posets{"product:3x3", "wedge:d=2,k=6", "wedge:d=3,k=4", "cube-interior:d=4"};
        std::uint64_t seed = 1;
        for (const auto& desc : posets) {
            auto poset = parsePoset(desc);
            for (auto v : {Variant::unordered, Variant::ordered, Variant::prefix}) {
                if (v == Variant::prefix && !poset->root()) continue;
                for (int bias : {1, 2}) {
                    for (int rep = 0; rep < 5; ++rep, ++seed) {
                        auto c = cfg(v, bias, seed % 2 ? Player::builder : Player::blocker);
                        c.seed = seed;
                        c.randomFallback = seed % 3 == 0;
                        RandomStrategy a(seed);
                        LocalRandomBlocker b(seed + 1000);
                        const auto text = toJson(playMatch(poset, a, b, c));
                        const auto again = toJson(makeTranscript(replay(transcriptFromJson(text))));
                        RandomStrategy a2(seed);
                        LocalRandomBlocker b2(seed + 1000);
                        const auto rerun = toJson(playMatch(poset, a2, b2, c));
                        mismatched += again != text || rerun != text;
                        ++replays;
                    }
                }
            }
        }
        const auto t0 = Clock::now();
        int failed = 0;
        for (const auto& id : theoremIds()) {
            const auto report = runVerification(id);
            if (!report.passed()) {
                ++failed;
                std::cout << report.text();
            }
        }
        const double secs = since(t0);
        out << replays << " transcripts replayed, " << mismatched << " differences; verify all: "
            << theoremIds().size() - static_cast<std::size_t>(failed) << "/" << theoremIds().size() << " PASS in "
            << std::setprecision(1) << std::fixed << secs << " s";
        return mismatched == 0 && failed == 0 && secs < 1800;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << " (" << std::fixed
              << std::setprecision(1) << since(start) << " s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
