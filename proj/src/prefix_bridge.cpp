#include "chaingame/prefix_bridge.hpp"

#include <algorithm>

#include "chaingame/digraph.hpp"

namespace chaingame {

std::vector<Vertex> BlockerFromDevil::headHistory(const GameState& state)
{
    const auto& b = state.board();
    const auto& order = state.builderOrder();
    std::vector<int> parent(order.size(), -1);
    for (std::size_t i = 1; i < order.size(); ++i) {
        int best = -1;
        for (std::size_t j = 0; j < i; ++j) {
            const auto& below = b.coveredBy(order[i]);
            if (std::find(below.begin(), below.end(), order[j]) == below.end()) continue;
            if (best < 0 || b.element(order[j]) < b.element(order[static_cast<std::size_t>(best)])) {
                best = static_cast<int>(j);
            }
        }
        parent[i] = best;
    }
    std::vector<Vertex> history;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; i = parent[static_cast<std::size_t>(i)]) {
        history.push_back(b.element(order[static_cast<std::size_t>(i)]).coords());
    }
    std::reverse(history.begin(), history.end());
    return history;
}

Element BlockerFromDevil::nextMove(const GameState& state, Player me)
{
    if (state.builderOrder().empty() || state.blockerMovesThisTurn() > 0) return fallbackMove(state, me);
    const auto history = headHistory(state);
    const auto burned = impliedBurned(*devil_, std::span<const Vertex>(history).first(history.size() - 1));
    if (auto v = devil_->respond(history, burned)) {
        const bool nonneg = std::all_of(v->begin(), v->end(), [](int x) { return x >= 0; });
        if (nonneg) {
            Element x(*v);
            const int i = state.board().indexOf(x);
            if (i >= 0 && !state.occupied(i)) return x;
        }
    }
    return fallbackMove(state, me);
}

std::unique_ptr<Strategy> blockerFromDevil(std::shared_ptr<const HistoryDevil> devil)
{
    return std::make_unique<BlockerFromDevil>(std::move(devil));
}

Element WalkerFromAngel::nextMove(const GameState& state, Player me)
{
    const auto& order = state.builderOrder();
    if (order.empty()) {
        if (auto root = state.poset().root(); root && !state.occupied(*root)) return *root;
        return fallbackMove(state, me);
    }
    std::vector<Vertex> path;
    for (int i : order) path.push_back(state.board().element(i).coords());
    DamageMap damage;
    for (int i : state.blockerIndices()) damage.burn(state.board().element(i).coords());
    // Blocker moves since Walker's last move.
    DevilAction last;
    for (auto it = state.moves().rbegin(); it != state.moves().rend() && it->player != me; ++it) {
        last.burns.push_back(it->element.coords());
    }
    std::reverse(last.burns.begin(), last.burns.end());
    CoverDigraph g(state.board().posetPtr());
    AngelView view{g, path, damage, &last, static_cast<int>(path.size())};
    if (auto v = angel_->move(view)) {
        Element x(*v);
        const int i = state.board().indexOf(x);
        if (i >= 0 && state.isLegal(me, i)) return x;
    }
    return fallbackMove(state, me);
}

std::unique_ptr<Strategy> walkerFromAngel(std::unique_ptr<Angel> angel)
{
    return std::make_unique<WalkerFromAngel>(std::move(angel));
}

} // namespace chaingame
