#include "chaingame/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "chaingame/angel_solver.hpp"
#include "chaingame/errors.hpp"
#include "chaingame/potential.hpp"
#include "chaingame/prefix_bridge.hpp"
#include "chaingame/probe.hpp"
#include "chaingame/robust_map.hpp"
#include "chaingame/solver.hpp"
#include "chaingame/strategies.hpp"
#include "chaingame/transfer.hpp"

namespace chaingame {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Bundle {
public:
    explicit Bundle(std::string id) { report_.id = std::move(id); }

    // Runs `body`, which fills `detail` and returns pass/fail. Exceptions
    // count as failures.
    void check(const std::string& name, const std::function<bool(std::string&)>& body)
    {
        CheckResult c;
        c.name = name;
        const auto t0 = Clock::now();
        try {
            c.passed = body(c.detail);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("error: ") + e.what();
        }
        c.seconds = since(t0);
        report_.checks.push_back(std::move(c));
    }

    VerifyReport finish(double seconds)
    {
        report_.seconds = seconds;
        return std::move(report_);
    }

private:
    VerifyReport report_;
};

int ceilDiv(int a, int b) { return (a + b - 1) / b; }

GameConfig configFor(Variant v, int bias = 1, Player first = Player::builder)
{
    GameConfig c;
    c.variant = v;
    c.bias = bias;
    c.firstPlayer = first;
    return c;
}

std::string joinInts(const std::vector<int>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

const std::vector<std::string> kProducts = {"product:2x2", "product:2x3", "product:3x3", "product:2x2x2",
                                            "product:2x4"};

int productFormula(const ChainProduct& p) { return p.maxChainSize() - p.maxFactor() / 2; }

void chainprod(Bundle& b)
{
    for (const auto& desc : kProducts) {
        b.check("value " + desc, [&](std::string& detail) {
            auto p = parsePoset(desc);
            const auto& prod = dynamic_cast<const ChainProduct&>(*p);
            const auto t0 = Clock::now();
            auto r = solveUnorderedValue(*p, configFor(Variant::unordered));
            const double secs = since(t0);
            const int expect = productFormula(prod);
            const int table = SolvedTable::bundled().value({{"instance", desc}, {"variant", "unordered"}});
            detail = "solver " + std::to_string(r.value) + ", k - floor(r/2) = " + std::to_string(expect)
                     + ", table " + std::to_string(table);
            return r.value == expect && table == expect && secs < 300;
        });
    }
    for (const auto& desc : kProducts) {
        b.check("sandwich " + desc, [&](std::string& detail) {
            auto p = parsePoset(desc);
            const auto& prod = dynamic_cast<const ChainProduct&>(*p);
            auto board = makeBoard(p);
            const auto cfg = configFor(Variant::unordered);
            ProductMaker maker(prod);
            ProductBreakerPairing pairing(prod);
            const int lower = worstCaseForBuilder(board, maker, cfg).value;
            const int upper = bestCaseForBuilder(board, pairing, cfg).value;
            const int value = solveUnorderedValue(*p, cfg).value;
            const int expect = productFormula(prod);
            detail = "maker vs every Breaker " + std::to_string(lower) + " <= value " + std::to_string(value)
                     + " <= every Maker vs pairing " + std::to_string(upper);
            return lower == expect && upper == expect && value == expect;
        });
    }
}

void hypercube(Bundle& b)
{
    for (int d = 2; d <= 4; ++d) {
        b.check("exact d=" + std::to_string(d), [d](std::string& detail) {
            auto p = std::make_shared<HypercubeInterior>(d);
            const auto cfg = configFor(Variant::ordered, 1, Player::blocker);
            HypercubeWalker walker(d);
            const int worst = worstCaseForBuilder(makeBoard(p), walker, cfg).value;
            const int value = solveOrderedValue(*p, cfg).value;
            const int table = SolvedTable::bundled().value(
                {{"instance", p->descriptor()}, {"variant", "ordered"}, {"first", "blocker"}});
            detail = "walker vs every Blocker " + std::to_string(worst) + ", solver " + std::to_string(value)
                     + ", table " + std::to_string(table);
            return worst == d - 1 && value == d - 1 && table == d - 1;
        });
    }
    b.check("random Blockers d<=10", [](std::string& detail) {
        int failures = 0;
        int matches = 0;
        for (int d = 2; d <= 10; ++d) {
            auto board = makeBoard(std::make_shared<HypercubeInterior>(d));
            for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
                for (auto first : {Player::blocker, Player::builder}) {
                    auto cfg = configFor(Variant::ordered, 1, first);
                    HypercubeWalker walker(d);
                    RandomStrategy blocker(seed * 7919 + static_cast<std::uint64_t>(d));
                    if (runMatch(board, walker, blocker, cfg).score() != d - 1) ++failures;
                    ++matches;
                }
            }
        }
        detail = std::to_string(matches) + " matches, " + std::to_string(failures) + " below d-1";
        return failures == 0;
    });
}

// Levels of Walker moves in a finished ordered game.
std::vector<int> walkerLevels(const GameState& s)
{
    std::vector<int> out;
    for (int i : s.builderOrder()) out.push_back(s.board().level(i));
    return out;
}

bool hasThreeConsecutive(std::vector<int> levels)
{
    std::sort(levels.begin(), levels.end());
    for (std::size_t i = 2; i < levels.size(); ++i) {
        if (levels[i] == levels[i - 1] + 1 && levels[i - 1] == levels[i - 2] + 1) return true;
    }
    return false;
}

void wedge2(Bundle& b)
{
    b.check("solver k=1..6", [](std::string& detail) {
        std::vector<int> got;
        bool ok = true;
        for (int k = 1; k <= 6; ++k) {
            Wedge w(2, k);
            const int v = solveOrderedValue(w, configFor(Variant::ordered)).value;
            const int table = SolvedTable::bundled().value({{"instance", w.descriptor()}, {"variant", "ordered"}});
            got.push_back(v);
            ok = ok && v == ceilDiv(2 * k, 3) && table == v;
        }
        detail = "values " + joinInts(got);
        return ok;
    });
    b.check("walker vs every Blocker k<=6", [](std::string& detail) {
        std::vector<int> got;
        bool ok = true;
        for (int k = 1; k <= 6; ++k) {
            Wedge2Walker walker;
            const int v = worstCaseForBuilder(makeBoard("wedge:d=2,k=" + std::to_string(k)), walker,
                                              configFor(Variant::ordered))
                              .value;
            got.push_back(v);
            ok = ok && v >= ceilDiv(2 * k, 3);
        }
        detail = "worst scores " + joinInts(got);
        return ok;
    });
    b.check("walker vs random Blockers k<=60", [](std::string& detail) {
        int failures = 0;
        int matches = 0;
        for (int k = 1; k <= 60; ++k) {
            auto board = makeBoard("wedge:d=2,k=" + std::to_string(k));
            for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
                Wedge2Walker walker;
                RandomStrategy blocker(seed * 104729 + static_cast<std::uint64_t>(k));
                if (runMatch(board, walker, blocker, configFor(Variant::ordered)).score() < ceilDiv(2 * k, 3)) {
                    ++failures;
                }
                ++matches;
            }
        }
        detail = std::to_string(matches) + " matches, " + std::to_string(failures) + " below ceil(2k/3)";
        return failures == 0;
    });
    b.check("blocker vs every Walker k<=6", [](std::string& detail) {
        std::uint64_t lines = 0;
        int bad = 0;
        std::vector<int> best;
        for (int k = 1; k <= 6; ++k) {
            Wedge2Blocker blocker;
            LineSearchOptions lo;
            lo.onLine = [&](const GameState& s) {
                ++lines;
                if (hasThreeConsecutive(walkerLevels(s))) ++bad;
            };
            best.push_back(bestCaseForBuilder(makeBoard("wedge:d=2,k=" + std::to_string(k)), blocker,
                                              configFor(Variant::ordered), lo)
                               .value);
        }
        bool ok = bad == 0;
        for (int k = 1; k <= 6; ++k) ok = ok && best[static_cast<std::size_t>(k - 1)] <= ceilDiv(2 * k, 3);
        detail = std::to_string(lines) + " Walker lines, " + std::to_string(bad)
                 + " with three consecutive levels; best scores " + joinInts(best);
        return ok;
    });
    b.check("walker vs blocker k=6", [](std::string& detail) {
        Wedge2Walker walker;
        Wedge2Blocker blocker;
        const int s = runMatch(makeBoard("wedge:d=2,k=6"), walker, blocker, configFor(Variant::ordered)).score();
        detail = "score " + std::to_string(s);
        return s == 4;
    });
}

struct GridStats {
    int score = 0;
    int blockerMoves = 0;
    int walkerMoves = 0;
    int skips = 0;
    int fallbacks = 0;
    int violations = 0;
    // Non-skipping moves that still dropped the potential by at least 1.
    int dropsWithoutSkip = 0;
    std::string firstViolation;
};

GridStats gridMatch(int k, Strategy& blocker)
{
    GameConfig cfg = configFor(Variant::ordered);
    cfg.initialBlockerSet = outsideCells(k);
    auto board = makeBoard(std::make_shared<Wedge>(2, 2 * k + 1));
    GridPotentialWalker walker(k);
    const GridPotential& gp = walker.potential();
    GridStats st;
    const DyadicRational half = DyadicRational(1).half();
    auto gridBlockers = [&](const GameState& s) {
        std::vector<Element> out;
        for (int i : s.blockerIndices()) {
            if (gp.inGrid(s.board().element(i))) out.push_back(s.board().element(i));
        }
        return out;
    };
    auto fail = [&](const std::string& what) {
        if (st.violations++ == 0) st.firstViolation = what;
    };
    auto observer = [&](const GameState& s, Player mover, const Element& x) {
        const auto head = s.head();
        auto blockers = gridBlockers(s);
        if (mover == Player::blocker) {
            ++st.blockerMoves;
            if (!head) return;
            const auto before = gp.at(blockers, *head);
            if (gp.inGrid(x)) blockers.push_back(x);
            const auto after = gp.at(blockers, *head);
            if (after - before > half) fail("Blocker raised potential by " + (after - before).str());
            return;
        }
        ++st.walkerMoves;
        if (walker.lastMoveFellBack()) {
            ++st.fallbacks;
            return;
        }
        if (!head) return;
        const int skipped = x.sum() - head->sum() - 1;
        const auto drop = gp.at(blockers, *head) - gp.at(blockers, x);
        if (skipped > 0) {
            ++st.skips;
            if (drop < DyadicRational(skipped)) {
                fail("skip of " + std::to_string(skipped) + " dropped potential by only " + drop.str());
            }
        } else {
            if (drop.sign() < 0) fail("move to " + x.str() + " raised potential by " + (-drop).str());
            if (drop >= DyadicRational(1)) ++st.dropsWithoutSkip;
        }
    };
    st.score = runMatch(board, walker, blocker, cfg, observer).score();
    return st;
}

int gridTarget(int k)
{
    return static_cast<int>(std::ceil(2.0 / 3.0 * (2 * k + 1) - initialPotentialBound(k)));
}

DyadicRational randomInfluenceCheck(std::mt19937_64& rng, int& failures)
{
    std::uniform_int_distribution<int> coord(-30, 30);
    DyadicRational total;
    const int a = coord(rng), bb = coord(rng), c = coord(rng), d = coord(rng);
    if (a == c && bb == d) return total;
    const auto lhs = influence(a, bb, c, d);
    const auto rhs = (influence(a + 1, bb, c, d) + influence(a, bb + 1, c, d)).half();
    if (lhs != rhs) ++failures;
    return lhs;
}

void mainthm(Bundle& b)
{
    b.check("initial potential k=2..200", [](std::string& detail) {
        int worstK = 0;
        double worstRatio = 0;
        bool ok = true;
        for (int k = 2; k <= 200; ++k) {
            const double v = initialOutsidePotential(k).toDouble();
            const double bound = initialPotentialBound(k);
            ok = ok && v < bound + 1e-9;
            if (v / bound > worstRatio) {
                worstRatio = v / bound;
                worstK = k;
            }
        }
        const auto two = initialOutsidePotential(2);
        ok = ok && two == DyadicRational(7, 3);
        detail = "value(2) = " + two.str() + ", largest value/bound " + std::to_string(worstRatio) + " at k="
                 + std::to_string(worstK);
        return ok;
    });
    b.check("martingale identity", [](std::string& detail) {
        int failures = 0;
        int checked = 0;
        for (int dc = -60; dc <= 60; ++dc) {
            for (int dd = -60; dd <= 60; ++dd) {
                if (dc == 0 && dd == 0) continue;
                const auto lhs = influence(0, 0, dc, dd);
                const auto rhs = (influence(1, 0, dc, dd) + influence(0, 1, dc, dd)).half();
                if (lhs != rhs) ++failures;
                ++checked;
            }
        }
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 10000; ++i) {
            randomInfluenceCheck(rng, failures);
            ++checked;
        }
        detail = std::to_string(checked) + " triples, " + std::to_string(failures) + " mismatches";
        return failures == 0;
    });
    for (int k : {10, 20, 40}) {
        b.check("grid k=" + std::to_string(k), [k](std::string& detail) {
            std::vector<std::unique_ptr<Strategy>> blockers;
            blockers.push_back(std::make_unique<RandomStrategy>(static_cast<std::uint64_t>(k)));
            blockers.push_back(std::make_unique<GreedySuccessorBlocker>());
            blockers.push_back(std::make_unique<Wedge2Blocker>());
            const int target = gridTarget(k);
            bool ok = true;
            std::ostringstream os;
            os << "target " << target << ";";
            for (auto& blocker : blockers) {
                const auto st = gridMatch(k, *blocker);
                ok = ok && st.score >= target && st.violations == 0;
                os << " " << blocker->name() << ": " << st.score << " levels, " << st.skips << " skips, "
                   << st.violations << " violations, " << st.dropsWithoutSkip << " drops >= 1 without a skip";
                if (st.fallbacks) os << ", " << st.fallbacks << " fallback moves";
                if (!st.firstViolation.empty()) os << " (" << st.firstViolation << ")";
                os << ";";
            }
            detail = os.str();
            return ok;
        });
    }
}

void mbAdEquiv(Bundle& b)
{
    for (bool backtrack : {false, true}) {
        b.check(std::string("devil blocker vs every Walker") + (backtrack ? " (backtracking)" : ""),
                [backtrack](std::string& detail) {
                    GameConfig cfg = configFor(Variant::prefix);
                    cfg.prefixTarget = 3;
                    cfg.prefixBacktrack = backtrack;
                    auto blocker = blockerFromDevil(devilWedge2());
                    LineSearchOptions lo;
                    lo.maxBuilderMoves = 8;
                    const auto t0 = Clock::now();
                    auto r = bestCaseForBuilder(makeBoard("wedge:d=2,k=8"), *blocker, cfg, lo);
                    const double secs = since(t0);
                    detail = "best prefix " + std::to_string(r.value) + " of 3, " + std::to_string(r.nodes)
                             + " nodes";
                    return r.value < 3 && secs < 60;
                });
    }
    b.check("prefix values", [](std::string& detail) {
        Wedge w(2, 6);
        const auto cfg = configFor(Variant::prefix);
        const int two = solvePrefix(w, 2, cfg).value;
        const int three = solvePrefix(w, 3, cfg).value;
        const auto& t = SolvedTable::bundled();
        const int t3 = t.value({{"instance", w.descriptor()}, {"variant", "prefix"}, {"target", 3}, {"backtrack", false}});
        detail = "n=2: " + std::to_string(two) + ", n=3: " + std::to_string(three) + ", table n=3: "
                 + std::to_string(t3);
        return two == 1 && three == 0 && t3 == 0;
    });
    b.check("devil vs solver angel", [](std::string& detail) {
        auto g = std::make_shared<WedgeDigraph>(2);
        SolverAngel angel(g, DevilPower::burning(1), 1, 6);
        HistoryDevilAdapter devil(devilWedge2());
        auto r = playAngelDevil(*g, angel, devil, 6, DevilPower::burning(1));
        const int n = solveAngelSurvival(g, 6, DevilPower::burning(1)).value;
        detail = "solver value " + std::to_string(n) + ", solver Angel survives " + std::to_string(r.survived)
                 + " turns against the restated Blocker";
        return n <= 2 && r.survived >= n;
    });
}

void movetrick(Bundle& b)
{
    for (const char* power : {"1", "2", "wastlund"}) {
        b.check(std::string("move set ") + power, [power](std::string& detail) {
            auto ms = powerMoveSet(power);
            auto map = robustMapFromMoveSet(ms, std::make_shared<GridDigraph>(ms));
            const int maxSum = ms.size() > 20 ? 3 : 4;
            auto region = wedgeRegion(static_cast<int>(ms.size()), maxSum);
            auto ok = verifyKRobust(map, 1, region);
            auto two = verifyKRobust(map, 2, region);
            detail = std::to_string(ms.size()) + " moves, " + std::to_string(ok.checkedEdges)
                     + " edges checked on the sum <= " + std::to_string(maxSum) + " region";
            if (two.counterexample) {
                detail += "; not 2-robust at " + vertexStr(two.counterexample->first) + " -> "
                          + vertexStr(two.counterexample->second);
            }
            return ok.ok && !two.ok && two.counterexample.has_value();
        });
    }
}

void mult(Bundle& b)
{
    for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        b.check("mult d=" + std::to_string(d) + " k=" + std::to_string(k), [d, k](std::string& detail) {
            auto map = multMap(d, k);
            auto region = wedgeRegion(d * k, 4);
            auto ok = verifyKRobust(map, k, region);
            auto over = verifyKRobust(map, k + 1, region);
            detail = std::to_string(ok.checkedEdges) + " edges " + (ok.ok ? "" : "NOT ") + std::to_string(k)
                     + "-robust";
            if (over.counterexample) {
                detail += "; fails at " + std::to_string(k + 1) + ": " + vertexStr(over.counterexample->first)
                          + " -> " + vertexStr(over.counterexample->second);
            }
            return ok.ok && !over.ok && over.counterexample.has_value();
        });
    }
    b.check("composite", [](std::string& detail) {
        auto map = compose(multMap(4, 2), multMap(2, 2));
        auto region = wedgeRegion(8, 3);
        auto ok = verifyKRobust(map, 4, region);
        detail = "declared " + std::to_string(map.robustness) + ", " + std::to_string(ok.checkedEdges)
                 + " edges checked";
        return ok.ok && map.robustness == 4;
    });
}

void kmap(Bundle& b)
{
    auto h = std::make_shared<WedgeDigraph>(2);
    b.check("burning transfer", [h](std::string& detail) {
        const int n = solveAngelSurvival(h, 6, DevilPower::burning(1)).value;
        const int table = SolvedTable::bundled().value(
            {{"instance", h->descriptor()}, {"variant", "angel"}, {"devil", "burn:1"}, {"horizon", 6}});
        auto map = multMap(2, 2);
        auto angel = transferAngel(map, std::make_unique<SolverAngel>(h, DevilPower::burning(1), 1, 6));
        auto wc = worstCaseSurvival(*map.source, *angel, n, DevilPower::burning(1));
        detail = "n* = " + std::to_string(n) + " (table " + std::to_string(table) + "), transferred Angel survives "
                 + std::to_string(wc.survived) + " over " + std::to_string(wc.lines) + " Devil lines";
        return wc.survived >= n && table == n;
    });
    b.check("fractional transfer", [h](std::string& detail) {
        const int n = solveAngelSurvival(h, 6, DevilPower::fractional(1), 2).value;
        const int table = SolvedTable::bundled().value({{"instance", h->descriptor()},
                                                         {"variant", "angel"},
                                                         {"devil", "fractional:1"},
                                                         {"horizon", 6},
                                                         {"granularity", 2}});
        auto map = multMap(2, 2);
        // Source damage in halves becomes target damage in quarters.
        auto angel = transferAngelFractional(map, std::make_unique<SolverAngel>(h, DevilPower::fractional(1), 4, 6));
        auto wc = worstCaseSurvival(*map.source, *angel, n, DevilPower::fractional(2), 2);
        detail = "n* = " + std::to_string(n) + " (table " + std::to_string(table)
                 + "), transferred Angel survives " + std::to_string(wc.survived) + " vs budget 2 over "
                 + std::to_string(wc.lines) + " Devil lines";
        return wc.survived >= n && table == n;
    });
    b.check("identity transfer", [h](std::string& detail) {
        auto map = identityMap(h);
        auto direct = std::make_unique<SolverAngel>(h, DevilPower::burning(1), 1, 6);
        auto moved = transferAngel(map, direct->clone());
        RandomDevil d1(5), d2(5);
        auto a = playAngelDevil(*h, *direct, d1, 6, DevilPower::burning(1));
        auto c = playAngelDevil(*h, *moved, d2, 6, DevilPower::burning(1));
        detail = "paths of length " + std::to_string(a.path.size()) + " and " + std::to_string(c.path.size());
        return a.path == c.path;
    });
}

void bias3(Bundle& b)
{
    b.check("every Walker on the 5-wedge, 10 levels", [](std::string& detail) {
        auto p = std::make_shared<Wedge>(5, 10);
        const auto cfg = configFor(Variant::ordered, 3);
        Wedge5Bias3Blocker blocker;
        const auto t0 = Clock::now();
        auto r = bestCaseForBuilder(makeBoard(p), blocker, cfg);
        const double secs = since(t0);
        detail = "best Walker " + std::to_string(r.value) + " of 10 levels, " + std::to_string(r.nodes) + " nodes";
        return r.value <= 8 && secs < 600;
    });
}

void gap(Bundle& b)
{
    for (bool backtrack : {false, true}) {
        b.check(std::string("lifted wedge-2 Blocker vs every Walker") + (backtrack ? " (backtracking)" : ""),
                [backtrack](std::string& detail) {
                    GameConfig cfg = configFor(Variant::prefix, 2);
                    cfg.prefixTarget = 4;
                    cfg.prefixBacktrack = backtrack;
                    auto p = std::make_shared<Wedge>(3, 6);
                    auto blocker = makeStrategy("lift:wedge2-blocker", *p, cfg);
                    LineSearchOptions lo;
                    lo.maxBuilderMoves = 6;
                    auto r = bestCaseForBuilder(makeBoard(p), *blocker, cfg, lo);
                    detail = "best prefix " + std::to_string(r.value) + " of 4, " + std::to_string(r.nodes)
                             + " nodes";
                    return r.value < 4;
                });
    }
    b.check("probe d=1 b=1", [](std::string& detail) {
        auto r = probeGapConjecture(1, 1, 3);
        detail = "longest forced prefix " + std::to_string(r.maxPrefix.value_or(-1));
        return r.prefixResolved && r.maxPrefix == 1;
    });
    b.check("probe d=2 b=1", [](std::string& detail) {
        auto r = probeGapConjecture(2, 1, 6);
        detail = "longest forced prefix " + std::to_string(r.maxPrefix.value_or(-1));
        return r.prefixResolved && r.maxPrefix && *r.maxPrefix < 3;
    });
}

using BundleFn = void (*)(Bundle&);

const std::vector<std::pair<std::string, BundleFn>>& bundles()
{
    static const std::vector<std::pair<std::string, BundleFn>> all = {
        {"chainprod", chainprod}, {"hypercube", hypercube}, {"wedge2", wedge2}, {"mainthm", mainthm},
        {"mb-ad-equiv", mbAdEquiv}, {"movetrick", movetrick}, {"mult", mult}, {"kmap", kmap},
        {"bias3", bias3}, {"gap", gap},
    };
    return all;
}

} // namespace

bool VerifyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const
{
    std::string out;
    for (const auto& c : checks) {
        out += (c.passed ? "PASS " : "FAIL ") + id + " / " + c.name + ": " + c.detail + "\n";
    }
    return out;
}

const std::vector<std::string>& theoremIds()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : bundles()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerifyReport runVerification(std::string_view id)
{
    for (const auto& [name, fn] : bundles()) {
        if (name != id) continue;
        const auto t0 = Clock::now();
        Bundle b(name);
        fn(b);
        return b.finish(since(t0));
    }
    throw ConfigError("unknown theorem id '" + std::string(id) + "'");
}

std::string dataDirectory()
{
    if (const char* env = std::getenv("CHAINGAME_DATA_DIR"); env && *env) return env;
    return CHAINGAME_DATA_DIR;
}

SolvedTable::SolvedTable(nlohmann::json records) : records_(std::move(records))
{
    if (!records_.is_array()) throw ConfigError("solved-instance table must be a JSON array");
}

const SolvedTable& SolvedTable::bundled()
{
    static const SolvedTable table = [] {
        const std::string path = dataDirectory() + "/solved_instances.json";
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open " + path);
        return SolvedTable(nlohmann::json::parse(in));
    }();
    return table;
}

int SolvedTable::value(const nlohmann::json& query) const
{
    const nlohmann::json* found = nullptr;
    for (const auto& rec : records_) {
        bool match = true;
        for (const auto& [key, want] : query.items()) {
            if (!rec.contains(key) || rec[key] != want) {
                match = false;
                break;
            }
        }
        if (!match) continue;
        if (found) throw ConfigError("ambiguous solved-instance query " + query.dump());
        found = &rec;
    }
    if (!found) throw ConfigError("no solved instance matches " + query.dump());
    return found->at("value").get<int>();
}

} // namespace chaingame
