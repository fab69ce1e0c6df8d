#include "chaingame/game.hpp"

#include <algorithm>
#include <random>

namespace chaingame {

std::string_view toString(Variant v)
{
    switch (v) {
    case Variant::unordered: return "unordered";
    case Variant::ordered: return "ordered";
    case Variant::prefix: return "prefix";
    }
    return "unordered";
}

std::string_view toString(Player p)
{
    return p == Player::builder ? "builder" : "blocker";
}

Variant parseVariant(std::string_view text)
{
    if (text == "unordered") return Variant::unordered;
    if (text == "ordered") return Variant::ordered;
    if (text == "prefix") return Variant::prefix;
    throw ConfigError("unknown variant: " + std::string(text));
}

Player parsePlayer(std::string_view text)
{
    if (text == "builder" || text == "maker" || text == "walker") return Player::builder;
    if (text == "blocker" || text == "breaker") return Player::blocker;
    throw ConfigError("unknown player: " + std::string(text));
}

void GameConfig::validate() const
{
    if (bias < 1) throw ConfigError("bias must be >= 1");
    if (prefixTarget && variant != Variant::prefix) {
        throw ConfigError("prefix target only applies to the prefix variant");
    }
    if (prefixTarget && *prefixTarget < 1) throw ConfigError("prefix target must be >= 1");
}

// ---------------------------------------------------------------------------

GameState::GameState(std::shared_ptr<const Board> board, GameConfig config)
    : board_(std::move(board)), config_(std::move(config))
{
    config_.validate();
    owner_.assign(static_cast<std::size_t>(board_->size()), Owner::none);
    unoccupied_ = board_->size();
    for (const auto& x : config_.initialBlockerSet) {
        const int i = board_->indexOf(x);
        if (i < 0) throw DomainError("initial blocker element " + x.str() + " not in poset");
        if (owner_[static_cast<std::size_t>(i)] != Owner::none) continue;
        owner_[static_cast<std::size_t>(i)] = Owner::blocker;
        blockerIdx_.push_back(i);
        --unoccupied_;
    }
    beginTurn(config_.firstPlayer);
}

GameState GameState::fromPosition(std::shared_ptr<const Board> board, GameConfig config,
                                  std::span<const Element> builderMoves,
                                  std::span<const Element> blockerSet, Player toMove,
                                  int movesRemaining)
{
    config.initialBlockerSet.assign(blockerSet.begin(), blockerSet.end());
    config.firstPlayer = Player::builder;
    GameState s(std::move(board), std::move(config));
    for (const auto& x : builderMoves) {
        const int i = s.board_->indexOf(x);
        if (i < 0 || s.occupied(i)) throw ContractError("bad builder move in position: " + x.str());
        if (s.head_ >= 0 && s.config_.variant == Variant::ordered) {
            s.skipped_ += s.board_->level(i) - s.board_->level(s.head_) - 1;
        } else if (s.head_ < 0 && s.config_.variant == Variant::ordered) {
            s.skipped_ += s.board_->level(i) - s.board_->minLevel();
        }
        s.owner_[static_cast<std::size_t>(i)] = Owner::builder;
        s.builderOrder_.push_back(i);
        s.moves_.push_back(Move{Player::builder, x, static_cast<int>(s.builderOrder_.size()) - 1});
        s.head_ = i;
        --s.unoccupied_;
    }
    s.toMove_ = toMove;
    s.remaining_ = movesRemaining;
    return s;
}

std::optional<Element> GameState::head() const
{
    if (head_ < 0) return std::nullopt;
    return board_->element(head_);
}

bool GameState::occupied(const Element& x) const
{
    const int i = board_->indexOf(x);
    return i >= 0 && occupied(i);
}

std::vector<Element> GameState::builderSet() const
{
    std::vector<Element> out;
    for (int i : builderOrder_) out.push_back(board_->element(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> GameState::blockerSet() const
{
    std::vector<Element> out;
    for (int i : blockerIdx_) out.push_back(board_->element(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Element> GameState::lastMoveBy(Player p) const
{
    for (auto it = moves_.rbegin(); it != moves_.rend(); ++it) {
        if (it->player == p) return it->element;
    }
    return std::nullopt;
}

int GameState::blockerMovesThisTurn() const
{
    return toMove_ == Player::blocker ? config_.bias - remaining_ : 0;
}

bool GameState::builderHasMove() const
{
    const auto& b = *board_;
    switch (config_.variant) {
    case Variant::unordered:
        return unoccupied_ > 0;
    case Variant::ordered: {
        if (head_ < 0) return unoccupied_ > 0;
        for (int j = b.levelBegin(b.level(head_) + 1); j < b.size(); ++j) {
            if (!occupied(j) && b.leq(head_, j)) return true;
        }
        return false;
    }
    case Variant::prefix: {
        if (head_ < 0) {
            auto root = b.poset().root();
            if (!root) return false;
            const int r = b.indexOf(*root);
            return r >= 0 && !occupied(r);
        }
        if (config_.prefixBacktrack) {
            for (int i : builderOrder_) {
                for (int c : b.covers(i)) {
                    if (!occupied(c)) return true;
                }
            }
            return false;
        }
        for (int c : b.covers(head_)) {
            if (!occupied(c)) return true;
        }
        return false;
    }
    }
    return false;
}

bool GameState::terminal() const
{
    if (config_.variant == Variant::prefix && config_.prefixTarget && score() >= *config_.prefixTarget) {
        return true;
    }
    return !builderHasMove();
}

bool GameState::isLegal(Player p, int index) const
{
    if (index < 0 || index >= board_->size() || occupied(index)) return false;
    if (p == Player::blocker) return true;
    const auto& b = *board_;
    switch (config_.variant) {
    case Variant::unordered:
        return true;
    case Variant::ordered:
        return head_ < 0 || b.lt(head_, index);
    case Variant::prefix: {
        if (head_ < 0) {
            auto root = b.poset().root();
            return root && b.indexOf(*root) == index;
        }
        const auto& below = b.coveredBy(index);
        if (config_.prefixBacktrack) {
            return std::any_of(below.begin(), below.end(),
                               [&](int v) { return owner(v) == Owner::builder; });
        }
        return std::find(below.begin(), below.end(), head_) != below.end();
    }
    }
    return false;
}

std::vector<int> GameState::legalMoveIndices(Player p) const
{
    if (terminal()) throw ContractError("no legal moves in a terminal position");
    std::vector<int> out;
    const auto& b = *board_;
    int start = 0;
    if (p == Player::builder && config_.variant == Variant::ordered && head_ >= 0) {
        start = b.levelBegin(b.level(head_) + 1);
    }
    for (int i = start; i < b.size(); ++i) {
        if (isLegal(p, i)) out.push_back(i);
    }
    return out;
}

std::vector<Element> GameState::legalMoves(Player p) const
{
    std::vector<Element> out;
    for (int i : legalMoveIndices(p)) out.push_back(board_->element(i));
    std::sort(out.begin(), out.end());
    return out;
}

void GameState::play(Player p, const Element& x)
{
    const int i = board_->indexOf(x);
    if (i < 0) throw RefereeError(x.str() + " is not an element of " + poset().descriptor(), x, p);
    playIndex(p, i);
}

void GameState::playIndex(Player p, int index)
{
    const Element& x = board_->element(index);
    if (terminal()) throw RefereeError("game is over; move " + x.str() + " rejected", x, p);
    if (p != toMove_) {
        throw RefereeError(std::string(toString(p)) + " moved out of turn with " + x.str(), x, p);
    }
    if (!isLegal(p, index)) {
        throw RefereeError("illegal " + std::string(toString(p)) + " move " + x.str(), x, p);
    }
    const std::size_t u = static_cast<std::size_t>(index);
    if (p == Player::builder) {
        if (config_.variant == Variant::ordered) {
            skipped_ += head_ < 0 ? board_->level(index) - board_->minLevel()
                                  : board_->level(index) - board_->level(head_) - 1;
        }
        owner_[u] = Owner::builder;
        builderOrder_.push_back(index);
        head_ = index;
    } else {
        owner_[u] = Owner::blocker;
        blockerIdx_.push_back(index);
    }
    --unoccupied_;
    moves_.push_back(Move{p, x, round_});
    advanceAfter(p);
}

void GameState::beginTurn(Player p)
{
    if (p == config_.firstPlayer && !moves_.empty()) ++round_;
    toMove_ = p;
    remaining_ = p == Player::blocker ? config_.bias : 1;
    // Blocker with nothing left to take forfeits the turn.
    if (p == Player::blocker && unoccupied_ == 0) {
        toMove_ = Player::builder;
        remaining_ = 1;
        if (config_.firstPlayer == Player::builder && !moves_.empty()) ++round_;
    }
}

void GameState::advanceAfter(Player p)
{
    if (p == Player::builder) {
        beginTurn(Player::blocker);
        return;
    }
    --remaining_;
    if (remaining_ == 0 || unoccupied_ == 0) beginTurn(Player::builder);
}

int GameState::score() const
{
    const auto& b = *board_;
    switch (config_.variant) {
    case Variant::unordered: {
        std::vector<int> idx = builderOrder_;
        std::sort(idx.begin(), idx.end());
        std::vector<int> best(idx.size(), 1);
        int answer = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (b.lt(idx[j], idx[i])) best[i] = std::max(best[i], best[j] + 1);
            }
            answer = std::max(answer, best[i]);
        }
        return answer;
    }
    case Variant::ordered:
        return static_cast<int>(builderOrder_.size());
    case Variant::prefix: {
        int top = -1;
        for (int i : builderOrder_) top = std::max(top, b.level(i));
        return top < 0 ? 0 : top - b.minLevel() + 1;
    }
    }
    return 0;
}

GameState applyMove(GameState state, Player p, const Element& x)
{
    state.play(p, x);
    return state;
}

int fallbackIndex(const GameState& state, Player p)
{
    if (!state.config().randomFallback) {
        if (state.terminal()) throw ContractError("no legal moves in a terminal position");
        for (int i = 0; i < state.board().size(); ++i) {
            if (state.isLegal(p, i)) return i;
        }
        throw ContractError("fallback requested with no legal move");
    }
    auto legal = state.legalMoveIndices(p);
    if (legal.empty()) throw ContractError("fallback requested with no legal move");
    std::mt19937_64 rng(state.config().seed ^ (0x9e3779b97f4a7c15ull * (state.moves().size() + 1)));
    std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
    return legal[pick(rng)];
}

Element fallbackMove(const GameState& state, Player p)
{
    return state.board().element(fallbackIndex(state, p));
}

} // namespace chaingame
