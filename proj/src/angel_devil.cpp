#include "chaingame/angel_devil.hpp"

#include <algorithm>

#include "chaingame/errors.hpp"

namespace chaingame {

std::string rationalStr(const Rational& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational DamageMap::damage(const Vertex& v) const
{
    auto it = entries_.find(v);
    return it == entries_.end() ? Rational(0) : it->second;
}

void DamageMap::add(const Vertex& v, const Rational& x)
{
    if (x < 0) throw ContractError("damage on " + vertexStr(v) + " cannot decrease");
    if (x == Rational(0)) return;
    const Rational next = damage(v) + x;
    if (next > 1) throw ContractError("damage on " + vertexStr(v) + " would exceed 1");
    entries_[v] = next;
}

void DamageMap::addClamped(const Vertex& v, const Rational& x)
{
    if (x < 0) throw ContractError("damage on " + vertexStr(v) + " cannot decrease");
    if (x == Rational(0)) return;
    entries_[v] = std::min(Rational(1), damage(v) + x);
}

std::set<Vertex> DamageMap::burnedSet() const
{
    std::set<Vertex> out;
    for (const auto& [v, x] : entries_) {
        if (x >= 1) out.insert(v);
    }
    return out;
}

void applyDevilAction(DamageMap& damage, const DevilAction& action, const DevilPower& power)
{
    if (!power.isFractional()) {
        if (!action.damage.empty()) throw ContractError("burning Devil cannot deal fractional damage");
        if (static_cast<int>(action.burns.size()) > power.burns) {
            throw ContractError("Devil burned " + std::to_string(action.burns.size()) + " vertices with bias "
                                + std::to_string(power.burns));
        }
        for (const auto& v : action.burns) damage.burn(v);
        return;
    }
    if (!action.burns.empty()) throw ContractError("fractional Devil must state damage increments");
    Rational total = 0;
    for (const auto& [v, x] : action.damage) {
        if (x < 0) throw ContractError("damage on " + vertexStr(v) + " cannot decrease");
        total += x;
    }
    if (total > power.budget) {
        throw ContractError("Devil spent " + rationalStr(total) + " over budget " + rationalStr(power.budget));
    }
    DamageMap next = damage;
    for (const auto& [v, x] : action.damage) next.add(v, x);
    damage = std::move(next);
}

AngelDevilResult playAngelDevil(const RootedDigraph& g, Angel& angel, Devil& devil, int horizon,
                                const DevilPower& power, const AngelDevilObserver& observer)
{
    if (horizon < 0) throw ContractError("horizon must be >= 0");
    AngelDevilResult r;
    r.path.push_back(g.root());
    DevilAction last;
    bool devilActed = false;
    for (int turn = 1; turn <= horizon; ++turn) {
        const auto options = g.outNeighbors(r.path.back());
        const bool canMove = std::any_of(options.begin(), options.end(),
                                         [&](const Vertex& v) { return r.damage.usable(v); });
        if (!canMove) break;
        AngelView view{g, r.path, r.damage, devilActed ? &last : nullptr, turn};
        auto next = angel.move(view);
        if (!next) break;
        if (std::find(options.begin(), options.end(), *next) == options.end()) {
            throw ContractError("Angel moved to non-neighbor " + vertexStr(*next));
        }
        if (!r.damage.usable(*next)) throw ContractError("Angel moved to burned vertex " + vertexStr(*next));
        r.path.push_back(*next);
        r.survived = turn;
        if (observer) observer(r.path, r.damage);
        if (turn == horizon) break;
        DevilView dview{g, r.path, r.damage, power, turn};
        last = devil.act(dview);
        applyDevilAction(r.damage, last, power);
        devilActed = true;
        if (observer) observer(r.path, r.damage);
    }
    return r;
}

// ---------------------------------------------------------------------------

std::set<Vertex> impliedBurned(const HistoryDevil& devil, std::span<const Vertex> path)
{
    std::set<Vertex> burned;
    for (std::size_t i = 1; i <= path.size(); ++i) {
        if (auto b = devil.respond(path.subspan(0, i), burned)) burned.insert(*b);
    }
    return burned;
}

std::optional<Vertex> DevilWedge2::respond(std::span<const Vertex> path, const std::set<Vertex>& burned) const
{
    if (path.empty() || path.back().size() != 2) return std::nullopt;
    const Vertex& h = path.back();
    const Vertex right{h[0] + 1, h[1]};
    const Vertex up{h[0], h[1] + 1};
    const bool r = burned.count(right) > 0;
    const bool u = burned.count(up) > 0;
    if (r != u) return r ? up : right;
    if (!r) {
        Vertex diag{h[0] + 1, h[1] + 1};
        if (!burned.count(diag)) return diag;
    }
    return std::nullopt;
}

std::shared_ptr<const HistoryDevil> devilWedge2()
{
    return std::make_shared<DevilWedge2>();
}

DevilAction HistoryDevilAdapter::act(const DevilView& view)
{
    DevilAction a;
    const auto burned = impliedBurned(*devil_, std::span<const Vertex>(view.path).first(view.path.size() - 1));
    if (auto b = devil_->respond(view.path, burned)) {
        if (view.power.isFractional()) {
            const Rational room = 1 - view.damage.damage(*b);
            const Rational x = std::min(room, view.power.budget);
            if (x > 0) a.damage.emplace_back(*b, x);
        } else if (view.power.burns >= 1) {
            a.burns.push_back(*b);
        }
    }
    return a;
}

// ---------------------------------------------------------------------------

std::optional<Vertex> GreedyAngel::move(const AngelView& view)
{
    std::optional<Vertex> best;
    int bestScore = -1;
    for (const auto& v : view.graph.outNeighbors(view.path.back())) {
        if (!view.damage.usable(v)) continue;
        const auto next = view.graph.outNeighbors(v);
        const int score = static_cast<int>(
            std::count_if(next.begin(), next.end(), [&](const Vertex& w) { return view.damage.usable(w); }));
        if (score > bestScore) {
            bestScore = score;
            best = v;
        }
    }
    return best;
}

DevilAction RandomDevil::act(const DevilView& view)
{
    std::vector<Vertex> targets;
    for (const auto& v : view.graph.outNeighbors(view.path.back())) {
        if (view.damage.usable(v)) targets.push_back(v);
    }
    std::shuffle(targets.begin(), targets.end(), rng_);
    DevilAction a;
    if (!view.power.isFractional()) {
        const auto n = std::min<std::size_t>(targets.size(), static_cast<std::size_t>(view.power.burns));
        a.burns.assign(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(n));
        return a;
    }
    Rational left = view.power.budget;
    for (const auto& v : targets) {
        if (left <= 0) break;
        const Rational x = std::min(left, 1 - view.damage.damage(v));
        a.damage.emplace_back(v, x);
        left -= x;
    }
    return a;
}

} // namespace chaingame
