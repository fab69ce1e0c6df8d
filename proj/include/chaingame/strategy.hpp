#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <string_view>

#include "chaingame/game.hpp"
#include "chaingame/transcript.hpp"

namespace chaingame {

/// Deterministic next-move function for one side of a match. Instances may
/// carry private state and must be bound to a single match at a time; use
/// clone() to branch a search.
class Strategy {
public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    virtual Element nextMove(const GameState& state, Player me) = 0;
    virtual std::unique_ptr<Strategy> clone() const = 0;

    // True when the move depends only on the head and the occupancy strictly
    // above it (plus the turn phase). Searches use this to share results
    // between positions.
    virtual bool headLocal() const { return false; }
};

/// Raised by playMatch when a strategy returns an illegal move.
class StrategyViolation : public RefereeError {
public:
    StrategyViolation(const std::string& strategy, const RefereeError& cause)
        : RefereeError("strategy '" + strategy + "' violated the rules: " + cause.what(),
                       cause.offending(), cause.player()),
          strategy_(strategy) {}

    const std::string& strategy() const { return strategy_; }

private:
    std::string strategy_;
};

class FallbackStrategy final : public Strategy {
public:
    std::string name() const override { return "fallback"; }
    Element nextMove(const GameState& state, Player me) override { return fallbackMove(state, me); }
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<FallbackStrategy>(*this); }
};

/// Uniformly random legal move from a private seeded generator.
class RandomStrategy final : public Strategy {
public:
    explicit RandomStrategy(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::string name() const override { return "random:" + std::to_string(seed_); }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<RandomStrategy>(*this); }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

// Called before each move is applied.
using MoveObserver = std::function<void(const GameState& before, Player mover, const Element& move)>;

// Runs a match to termination. Throws StrategyViolation on an illegal move.
GameState runMatch(std::shared_ptr<const Board> board, Strategy& builder, Strategy& blocker,
                   const GameConfig& config, const MoveObserver& observer = {});

Transcript playMatch(std::shared_ptr<const Poset> poset, Strategy& builder, Strategy& blocker,
                     const GameConfig& config, const MoveObserver& observer = {});

// Strategy registry: hypercube-walker, product-maker, product-breaker-pairing,
// wedge2-walker, wedge2-blocker, grid-potential-walker, wedge5-bias3-blocker,
// greedy-successor-blocker, local-random-blocker:<seed>, lift:<inner>,
// fallback, random:<seed>. Parameters come from the poset and config.
std::unique_ptr<Strategy> makeStrategy(std::string_view name, const Poset& poset, const GameConfig& config);

} // namespace chaingame
