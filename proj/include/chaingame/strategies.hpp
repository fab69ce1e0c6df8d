#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "chaingame/decomposition.hpp"
#include "chaingame/potential.hpp"
#include "chaingame/strategy.hpp"

namespace chaingame {

/// Next Walker set in the interior of the d-cube: head plus the smallest
/// index e such that the new set is free and no Blocker set contains it.
/// `head` is a 0/1 vector (all zeros before the first move).
std::optional<Element> hypercubeStep(int d, const Element& head, std::span<const Element> blockers,
                                     const std::function<bool(const Element&)>& isFree);

class HypercubeWalker final : public Strategy {
public:
    explicit HypercubeWalker(int d) : d_(d) {}
    std::string name() const override { return "hypercube-walker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<HypercubeWalker>(*this); }

private:
    int d_;
};

/// Maker on a chain product: claims the Z chain in response to Breaker and
/// runs the hypercube strategy inside each block A_j.
class ProductMaker final : public Strategy {
public:
    explicit ProductMaker(const ChainProduct& product);
    std::string name() const override { return "product-maker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<ProductMaker>(*this); }

private:
    std::optional<Element> zMove(const GameState& state) const;
    std::optional<Element> blockMove(const GameState& state, const ProductBlock& block) const;

    std::shared_ptr<const ProductDecomposition> dec_;
};

/// Breaker pairs (x, 2j) with (x, 2j+1) along the longest axis.
class ProductBreakerPairing final : public Strategy {
public:
    explicit ProductBreakerPairing(const ChainProduct& product);
    std::string name() const override { return "product-breaker-pairing"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<ProductBreakerPairing>(*this);
    }

    std::optional<Element> mate(const Element& x) const;

private:
    int axis_;
    int pairs_;
};

/// Opens at the root, then takes the lowest-level free successor of the head.
class Wedge2Walker final : public Strategy {
public:
    std::string name() const override { return "wedge2-walker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Wedge2Walker>(*this); }
    bool headLocal() const override { return true; }
};

class Wedge2Blocker final : public Strategy {
public:
    std::string name() const override { return "wedge2-blocker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Wedge2Blocker>(*this); }
};

/// Walker on the (k+1)x(k+1) grid steering toward lower potential. Cells
/// outside the grid count as Blocker cells whether or not the board holds
/// them.
class GridPotentialWalker final : public Strategy {
public:
    explicit GridPotentialWalker(int k);
    std::string name() const override { return "grid-potential-walker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<GridPotentialWalker>(*this); }

    const GridPotential& potential() const { return *potential_; }
    // Whether the previous move came from the engine fallback.
    bool lastMoveFellBack() const { return fellBack_; }

private:
    std::shared_ptr<GridPotential> potential_;
    bool fellBack_ = false;
};

/// Bias-3 Blocker on the 5-wedge from the four-row table, matched up to
/// coordinate permutation relative to Walker's move after its last skip.
class Wedge5Bias3Blocker final : public Strategy {
public:
    std::string name() const override { return "wedge5-bias3-blocker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<Wedge5Bias3Blocker>(*this); }

    // Table responses for Walker's current position; nullopt marks a slot
    // left to the fallback. Empty when no row matches.
    static std::vector<std::optional<Element>> responses(const GameState& state);
};

/// Bias b+1 Blocker on the (d+1)-wedge built from a bias-b Blocker on the
/// d-wedge: burn head + e_{d+1}, then let the inner strategy play in the
/// plane of the head.
class LiftBlocker final : public Strategy {
public:
    LiftBlocker(std::unique_ptr<Strategy> inner, int d, int b);
    LiftBlocker(const LiftBlocker& other);
    std::string name() const override { return "lift:" + inner_->name(); }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<LiftBlocker>(*this); }

    // The inner game as seen from the plane of the head.
    GameState innerView(const GameState& state) const;

private:
    std::shared_ptr<const Board> planeBoard(const GameState& state, int height) const;

    std::unique_ptr<Strategy> inner_;
    int d_;
    int b_;
    mutable std::map<int, std::shared_ptr<const Board>> planes_;
};

/// Burns the move the greedy Walker would make next: the lowest-level free
/// successor of the head.
class GreedySuccessorBlocker final : public Strategy {
public:
    std::string name() const override { return "greedy-successor-blocker"; }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override {
        return std::make_unique<GreedySuccessorBlocker>(*this);
    }
};

/// Random free successor of the head within two levels, else any random move.
class LocalRandomBlocker final : public Strategy {
public:
    explicit LocalRandomBlocker(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::string name() const override { return "local-random-blocker:" + std::to_string(seed_); }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<LocalRandomBlocker>(*this); }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

} // namespace chaingame
