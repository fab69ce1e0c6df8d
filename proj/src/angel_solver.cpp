#include "chaingame/angel_solver.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "chaingame/errors.hpp"

namespace chaingame {

namespace {

// Calls visit(add) for every maximal way to add units to `caps`-bounded
// slots: burns pick `burns` whole slots, fractional spends `budget` units.
bool enumerateAdds(const std::vector<int>& caps, bool fractional, int burns, int budget,
                   const std::function<bool(const std::vector<int>&)>& visit)
{
    const int n = static_cast<int>(caps.size());
    std::vector<int> add(caps.size(), 0);
    if (!fractional) {
        const int pick = std::min(burns, n);
        std::function<bool(int, int)> rec = [&](int start, int left) -> bool {
            if (left == 0) return visit(add);
            for (int i = start; i <= n - left; ++i) {
                add[static_cast<std::size_t>(i)] = caps[static_cast<std::size_t>(i)];
                if (!rec(i + 1, left - 1)) return false;
                add[static_cast<std::size_t>(i)] = 0;
            }
            return true;
        };
        return rec(0, pick);
    }
    std::vector<int> suffix(caps.size() + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + caps[static_cast<std::size_t>(i)];
    const int total = std::min(budget, suffix[0]);
    std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
        if (left == 0) return visit(add);
        if (i == n) return true;
        const int hi = std::min(left, caps[static_cast<std::size_t>(i)]);
        const int lo = std::max(0, left - suffix[static_cast<std::size_t>(i) + 1]);
        for (int a = hi; a >= lo; --a) {
            add[static_cast<std::size_t>(i)] = a;
            if (!rec(i + 1, left - a)) return false;
        }
        add[static_cast<std::size_t>(i)] = 0;
        return true;
    };
    return rec(0, total);
}

int unitsFor(const Rational& x, int q)
{
    const Rational scaled = x * q;
    if (scaled.denominator() != 1) {
        throw ContractError("damage " + rationalStr(x) + " is not a multiple of 1/" + std::to_string(q));
    }
    return static_cast<int>(scaled.numerator());
}

} // namespace

AngelSolver::AngelSolver(std::shared_ptr<const RootedDigraph> g, DevilPower power, int granularity,
                         std::uint64_t nodeLimit)
    : g_(std::move(g)), power_(power), q_(granularity), nodeLimit_(nodeLimit)
{
    if (q_ < 1) throw ConfigError("granularity must be >= 1");
    if (power_.isFractional()) {
        if (power_.budget < 0) throw ConfigError("budget must be >= 0");
        unitsPerTurn_ = unitsFor(power_.budget, q_);
    } else {
        if (power_.burns < 0) throw ConfigError("bias must be >= 0");
        unitsPerTurn_ = 0;
    }
}

const std::vector<Vertex>& AngelSolver::relevant(const Vertex& v, int t)
{
    auto k = std::make_pair(v, t);
    auto it = relevant_.find(k);
    if (it != relevant_.end()) return it->second;
    std::vector<Vertex> out;
    std::set<Vertex> seen;
    std::vector<Vertex> layer{v};
    for (int step = 0; step < t && !layer.empty(); ++step) {
        std::set<Vertex> next;
        for (const auto& x : layer) {
            for (auto& w : g_->outNeighbors(x)) {
                if (!seen.count(w)) next.insert(std::move(w));
            }
        }
        for (const auto& w : next) {
            seen.insert(w);
            out.push_back(w);
        }
        layer.assign(next.begin(), next.end());
    }
    return relevant_.emplace(k, std::move(out)).first->second;
}

AngelSolver::Units AngelSolver::toUnits(const DamageMap& damage) const
{
    Units u;
    for (const auto& [v, x] : damage.entries()) {
        const int units = x >= 1 ? q_ : unitsFor(x, q_);
        if (units > 0) u[v] = std::min(units, q_);
    }
    return u;
}

std::vector<int> AngelSolver::key(const Vertex& v, const Units& d, int t)
{
    std::vector<int> k(v);
    k.push_back(t);
    const auto& rel = relevant(v, t);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        auto it = d.find(rel[i]);
        if (it != d.end() && it->second > 0) {
            k.push_back(static_cast<int>(i));
            k.push_back(it->second);
        }
    }
    return k;
}

void AngelSolver::forEachAction(const std::vector<Vertex>& targets, const Units& d,
                                const std::function<bool(const Units&)>& visit) const
{
    std::vector<Vertex> open;
    std::vector<int> caps;
    for (const auto& v : targets) {
        auto it = d.find(v);
        const int cur = it == d.end() ? 0 : it->second;
        if (cur < q_) {
            open.push_back(v);
            caps.push_back(q_ - cur);
        }
    }
    bool any = false;
    enumerateAdds(caps, power_.isFractional(), power_.burns, unitsPerTurn_, [&](const std::vector<int>& add) {
        any = true;
        Units next = d;
        for (std::size_t i = 0; i < add.size(); ++i) {
            if (add[i] > 0) next[open[i]] += add[i];
        }
        return visit(next);
    });
    if (!any) visit(d);
}

bool AngelSolver::canSurvive(const Vertex& v, const Units& d, int t)
{
    if (t == 0) return true;
    if (nodeLimit_ && nodes_ >= nodeLimit_) throw ResourceLimitError("angel search node limit reached", nodes_);
    ++nodes_;
    auto k = key(v, d, t);
    if (auto it = memo_.find(k); it != memo_.end()) {
        ++hits_;
        return it->second;
    }
    bool result = false;
    for (const auto& u : g_->outNeighbors(v)) {
        auto it = d.find(u);
        if (it != d.end() && it->second >= q_) continue;
        if (t == 1 || devilCannotStop(u, d, t - 1)) {
            result = true;
            break;
        }
    }
    memo_.emplace(std::move(k), result);
    return result;
}

bool AngelSolver::devilCannotStop(const Vertex& u, const Units& d, int t)
{
    bool result = true;
    forEachAction(relevant(u, t), d, [&](const Units& next) {
        if (!canSurvive(u, next, t)) {
            result = false;
            return false;
        }
        return true;
    });
    return result;
}

std::vector<DevilAction> AngelSolver::devilActions(const std::vector<Vertex>& targets, const DamageMap& damage) const
{
    const Units base = toUnits(damage);
    std::vector<DevilAction> out;
    forEachAction(targets, base, [&](const Units& next) {
        DevilAction a;
        for (const auto& [v, units] : next) {
            auto it = base.find(v);
            const int add = units - (it == base.end() ? 0 : it->second);
            if (add <= 0) continue;
            if (power_.isFractional()) {
                a.damage.emplace_back(v, Rational(add, q_));
            } else {
                a.burns.push_back(v);
            }
        }
        out.push_back(std::move(a));
        return true;
    });
    return out;
}

int AngelSolver::value(const Vertex& position, const DamageMap& damage, int horizon)
{
    const Units d = toUnits(damage);
    for (int t = 1; t <= horizon; ++t) {
        if (!canSurvive(position, d, t)) return t - 1;
    }
    return std::max(horizon, 0);
}

std::pair<std::optional<Vertex>, int> AngelSolver::bestMove(const Vertex& position, const DamageMap& damage,
                                                            int horizon)
{
    const Units d = toUnits(damage);
    std::optional<Vertex> best;
    int bestValue = 0;
    for (const auto& u : g_->outNeighbors(position)) {
        auto it = d.find(u);
        if (it != d.end() && it->second >= q_) continue;
        int s = 0;
        while (s + 1 < horizon && devilCannotStop(u, d, s + 1)) ++s;
        if (!best || s + 1 > bestValue) {
            best = u;
            bestValue = s + 1;
        }
        if (bestValue >= horizon) break;
    }
    return {best, bestValue};
}

AngelSolveResult solveAngelSurvival(std::shared_ptr<const RootedDigraph> g, int horizon, const DevilPower& power,
                                    int granularity)
{
    if (horizon < 0) throw ContractError("horizon must be >= 0");
    AngelSolver solver(g, power, granularity);
    AngelSolveResult r;
    r.granularity = granularity;
    const Vertex root = g->root();
    r.value = solver.value(root, DamageMap{}, horizon);
    if (horizon > 0) r.move = solver.bestMove(root, DamageMap{}, horizon).first;
    r.nodes = solver.nodes();
    r.memoHits = solver.memoHits();
    return r;
}

SolverAngel::SolverAngel(std::shared_ptr<const RootedDigraph> g, DevilPower power, int granularity, int horizon)
    : solver_(std::make_shared<AngelSolver>(std::move(g), power, granularity)), horizon_(horizon)
{
}

std::optional<Vertex> SolverAngel::move(const AngelView& view)
{
    const int remaining = std::max(1, horizon_ - (view.turn - 1));
    return solver_->bestMove(view.path.back(), view.damage, remaining).first;
}

// ---------------------------------------------------------------------------

namespace {

struct WorstSearch {
    const RootedDigraph& g;
    const DevilPower& power;
    AngelSolver enumerator;
    int horizon;
    std::uint64_t lines = 0;
    std::vector<Vertex> worstPath;

    int run(Angel& angel, std::vector<Vertex>& path, const DamageMap& damage, const DevilAction* last, int turn)
    {
        const auto options = g.outNeighbors(path.back());
        const bool canMove = std::any_of(options.begin(), options.end(),
                                         [&](const Vertex& v) { return damage.usable(v); });
        auto finish = [&](int survived) {
            ++lines;
            if (worstPath.empty() || survived < static_cast<int>(worstPath.size()) - 1) worstPath = path;
            return survived;
        };
        if (!canMove) return finish(turn - 1);
        AngelView view{g, path, damage, last, turn};
        auto next = angel.move(view);
        if (!next) return finish(turn - 1);
        if (std::find(options.begin(), options.end(), *next) == options.end() || !damage.usable(*next)) {
            throw ContractError("Angel made an illegal move to " + vertexStr(*next));
        }
        path.push_back(*next);
        int worst = horizon;
        if (turn == horizon) {
            worst = finish(horizon);
        } else {
            const auto actions = enumerator.devilActions(enumerator.relevant(*next, horizon - turn), damage);
            for (const auto& a : actions) {
                DamageMap nd = damage;
                applyDevilAction(nd, a, power);
                auto branch = angel.clone();
                worst = std::min(worst, run(*branch, path, nd, &a, turn + 1));
                if (worst <= turn) break;
            }
        }
        path.pop_back();
        return worst;
    }
};

} // namespace

WorstCase worstCaseSurvival(const RootedDigraph& g, const Angel& angel, int horizon, const DevilPower& power,
                            int granularity)
{
    // The enumerator only needs neighbor queries; share g without ownership.
    std::shared_ptr<const RootedDigraph> alias(std::shared_ptr<const RootedDigraph>{}, &g);
    WorstSearch search{g, power, AngelSolver(alias, power, granularity), horizon, 0, {}};
    std::vector<Vertex> path{g.root()};
    auto first = angel.clone();
    WorstCase w;
    w.survived = horizon == 0 ? 0 : search.run(*first, path, DamageMap{}, nullptr, 1);
    w.lines = search.lines;
    w.worstPath = search.worstPath;
    return w;
}

} // namespace chaingame
