#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chaingame/element.hpp"
#include "chaingame/errors.hpp"
#include "chaingame/poset.hpp"

namespace chaingame {

enum class Variant { unordered, ordered, prefix };
enum class Player { builder, blocker };

std::string_view toString(Variant v);
std::string_view toString(Player p);
Variant parseVariant(std::string_view text);
Player parsePlayer(std::string_view text);
inline Player opponent(Player p) { return p == Player::builder ? Player::blocker : Player::builder; }

struct GameConfig {
    Variant variant = Variant::unordered;
    int bias = 1; // blocker moves per turn
    Player firstPlayer = Player::builder;
    std::uint64_t seed = 0;
    std::optional<int> prefixTarget;
    // Prefix game where Walker may extend any prefix he has climbed, not
    // only the current head.
    bool prefixBacktrack = false;
    // Seeded random fallback instead of (level, lexicographic).
    bool randomFallback = false;
    std::vector<Element> initialBlockerSet;

    void validate() const;
};

struct Move {
    Player player;
    Element element;
    int roundIndex = 0;

    bool operator==(const Move&) const = default;
};

/// Raised when a move violates the rules. Carries the offending element.
class RefereeError : public std::runtime_error {
public:
    RefereeError(const std::string& what, Element offending, Player player)
        : std::runtime_error(what), offending_(std::move(offending)), player_(player) {}

    const Element& offending() const { return offending_; }
    Player player() const { return player_; }

private:
    Element offending_;
    Player player_;
};

enum class Owner : std::uint8_t { none, builder, blocker };

/// Referee state for one match of the chain game in any variant.
class GameState {
public:
    GameState(std::shared_ptr<const Board> board, GameConfig config);

    // Arbitrary mid-game position. Builder moves are replayed in order (so
    // head and skip accounting are right); blocker elements are placed
    // without history.
    static GameState fromPosition(std::shared_ptr<const Board> board, GameConfig config,
                                  std::span<const Element> builderMoves,
                                  std::span<const Element> blockerSet, Player toMove,
                                  int movesRemaining);

    const Board& board() const { return *board_; }
    std::shared_ptr<const Board> boardPtr() const { return board_; }
    const Poset& poset() const { return board_->poset(); }
    const GameConfig& config() const { return config_; }

    Player toMove() const { return toMove_; }
    int movesRemainingThisTurn() const { return remaining_; }
    int roundIndex() const { return round_; }
    int skippedLevels() const { return skipped_; }

    std::optional<Element> head() const;
    int headIndex() const { return head_; }

    Owner owner(int index) const { return owner_[static_cast<std::size_t>(index)]; }
    bool occupied(int index) const { return owner(index) != Owner::none; }
    bool occupied(const Element& x) const;
    int unoccupiedCount() const { return unoccupied_; }

    const std::vector<Move>& moves() const { return moves_; }
    const std::vector<int>& builderOrder() const { return builderOrder_; }
    const std::vector<int>& blockerIndices() const { return blockerIdx_; }
    std::vector<Element> builderSet() const;
    std::vector<Element> blockerSet() const;
    std::optional<Element> lastMoveBy(Player p) const;
    int blockerMovesThisTurn() const;

    bool builderHasMove() const;
    bool terminal() const;

    std::vector<int> legalMoveIndices(Player p) const;
    std::vector<Element> legalMoves(Player p) const;
    bool isLegal(Player p, int index) const;

    void play(Player p, const Element& x);
    void playIndex(Player p, int index);

    int score() const;

private:
    void advanceAfter(Player p);
    void beginTurn(Player p);

    std::shared_ptr<const Board> board_;
    GameConfig config_;
    std::vector<Owner> owner_;
    std::vector<int> builderOrder_;
    std::vector<int> blockerIdx_;
    std::vector<Move> moves_;
    int head_ = -1;
    Player toMove_ = Player::builder;
    int remaining_ = 1;
    int round_ = 0;
    int skipped_ = 0;
    int unoccupied_ = 0;
};

GameState applyMove(GameState state, Player p, const Element& x);

// "Plays arbitrarily": lowest level then lexicographically smallest legal
// move, or a seeded random legal move when config.randomFallback is set.
Element fallbackMove(const GameState& state, Player p);
int fallbackIndex(const GameState& state, Player p);

} // namespace chaingame
