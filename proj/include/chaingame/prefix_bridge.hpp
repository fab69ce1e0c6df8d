#pragma once

#include <memory>

#include "chaingame/angel_devil.hpp"
#include "chaingame/strategy.hpp"

namespace chaingame {

/// Blocker in the prefix game that answers each Walker move as the Devil
/// would answer a lone Angel that followed the stored history to it.
/// A move covering several climbed elements keeps the history through the
/// lexicographically smallest one.
class BlockerFromDevil final : public Strategy {
public:
    explicit BlockerFromDevil(std::shared_ptr<const HistoryDevil> devil) : devil_(std::move(devil)) {}

    std::string name() const override { return "devil-blocker:" + devil_->name(); }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<BlockerFromDevil>(*this); }

    // Stored history for the head of the given position.
    static std::vector<Vertex> headHistory(const GameState& state);

private:
    std::shared_ptr<const HistoryDevil> devil_;
};

std::unique_ptr<Strategy> blockerFromDevil(std::shared_ptr<const HistoryDevil> devil);

/// Walker that copies an Angel on the cover digraph, treating Blocker moves
/// as burns.
class WalkerFromAngel final : public Strategy {
public:
    explicit WalkerFromAngel(std::unique_ptr<Angel> angel) : angel_(std::move(angel)) {}
    WalkerFromAngel(const WalkerFromAngel& other) : Strategy(other), angel_(other.angel_->clone()) {}

    std::string name() const override { return "angel-walker:" + angel_->name(); }
    Element nextMove(const GameState& state, Player me) override;
    std::unique_ptr<Strategy> clone() const override { return std::make_unique<WalkerFromAngel>(*this); }

private:
    std::unique_ptr<Angel> angel_;
};

std::unique_ptr<Strategy> walkerFromAngel(std::unique_ptr<Angel> angel);

} // namespace chaingame
