#include "chaingame/strategy.hpp"

#include <charconv>

#include "chaingame/strategies.hpp"

namespace chaingame {

Element RandomStrategy::nextMove(const GameState& state, Player me)
{
    const auto& b = state.board();
    // Blocker moves are any free element: rejection sampling is uniform and
    // avoids a full scan while the board is mostly empty.
    if (me == Player::blocker && state.unoccupiedCount() * 4 >= b.size()) {
        std::uniform_int_distribution<int> any(0, b.size() - 1);
        for (;;) {
            const int i = any(rng_);
            if (!state.occupied(i)) return b.element(i);
        }
    }
    const auto legal = state.legalMoveIndices(me);
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    return state.board().element(legal[pick(rng_)]);
}

GameState runMatch(std::shared_ptr<const Board> board, Strategy& builder, Strategy& blocker,
                   const GameConfig& config, const MoveObserver& observer)
{
    GameState state(std::move(board), config);
    while (!state.terminal()) {
        const Player p = state.toMove();
        Strategy& s = p == Player::builder ? builder : blocker;
        Element x = s.nextMove(state, p);
        if (observer) observer(state, p, x);
        try {
            state.play(p, x);
        } catch (const RefereeError& e) {
            throw StrategyViolation(s.name(), e);
        }
    }
    return state;
}

Transcript playMatch(std::shared_ptr<const Poset> poset, Strategy& builder, Strategy& blocker,
                     const GameConfig& config, const MoveObserver& observer)
{
    return makeTranscript(runMatch(makeBoard(std::move(poset)), builder, blocker, config, observer));
}

namespace {

std::uint64_t parseSeed(std::string_view text, std::string_view name)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("bad seed in strategy name: " + std::string(name));
    }
    return v;
}

int gridSize(const Poset& poset)
{
    if (auto* w = dynamic_cast<const Wedge*>(&poset); w && w->dimension() == 2 && w->levels()
        && *w->levels() % 2 == 1) {
        return (*w->levels() - 1) / 2;
    }
    if (auto* p = dynamic_cast<const ChainProduct*>(&poset);
        p && p->dimension() == 2 && p->sizes()[0] == p->sizes()[1]) {
        return p->sizes()[0] - 1;
    }
    throw ConfigError("grid-potential-walker needs wedge:d=2 with odd k or a square product");
}

} // namespace

std::unique_ptr<Strategy> makeStrategy(std::string_view name, const Poset& poset, const GameConfig& config)
{
    auto product = [&]() -> const ChainProduct& {
        auto* p = dynamic_cast<const ChainProduct*>(&poset);
        if (!p) throw ConfigError(std::string(name) + " needs a chain product");
        return *p;
    };
    if (name == "fallback") return std::make_unique<FallbackStrategy>();
    if (name.starts_with("random:")) return std::make_unique<RandomStrategy>(parseSeed(name.substr(7), name));
    if (name.starts_with("local-random-blocker:")) {
        return std::make_unique<LocalRandomBlocker>(parseSeed(name.substr(21), name));
    }
    if (name == "hypercube-walker") {
        if (!dynamic_cast<const HypercubeInterior*>(&poset)) {
            throw ConfigError("hypercube-walker needs cube-interior:d=D");
        }
        return std::make_unique<HypercubeWalker>(poset.dimension());
    }
    if (name == "product-maker") return std::make_unique<ProductMaker>(product());
    if (name == "product-breaker-pairing") return std::make_unique<ProductBreakerPairing>(product());
    if (name == "wedge2-walker") return std::make_unique<Wedge2Walker>();
    if (name == "wedge2-blocker") return std::make_unique<Wedge2Blocker>();
    if (name == "grid-potential-walker") return std::make_unique<GridPotentialWalker>(gridSize(poset));
    if (name == "wedge5-bias3-blocker") return std::make_unique<Wedge5Bias3Blocker>();
    if (name == "greedy-successor-blocker") return std::make_unique<GreedySuccessorBlocker>();
    if (name.starts_with("lift:")) {
        auto* w = dynamic_cast<const Wedge*>(&poset);
        if (!w || !w->levels() || w->dimension() < 2 || config.bias < 2) {
            throw ConfigError("lift needs a finite wedge of dimension >= 2 and bias >= 2");
        }
        const int d = w->dimension() - 1;
        GameConfig inner = config;
        inner.bias = config.bias - 1;
        Wedge plane(d, w->levels());
        return std::make_unique<LiftBlocker>(makeStrategy(name.substr(5), plane, inner), d, inner.bias);
    }
    throw ConfigError("unknown strategy: " + std::string(name));
}

} // namespace chaingame
