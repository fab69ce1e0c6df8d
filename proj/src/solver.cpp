#include "chaingame/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include <json.hpp>

namespace chaingame {

namespace {

using Mask = unsigned __int128;

Mask bit(int i)
{
    return Mask(1) << i;
}

std::uint64_t envNumber(const char* name)
{
    const char* v = std::getenv(name);
    if (!v || !*v) return 0;
    char* end = nullptr;
    const auto n = std::strtoull(v, &end, 10);
    return end && *end == '\0' ? n : 0;
}

struct Key {
    Mask a = 0;
    Mask b = 0;
    std::uint32_t meta = 0;

    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept
    {
        auto mix = [](std::uint64_t h, std::uint64_t x) {
            x *= 0x9e3779b97f4a7c15ull;
            x ^= x >> 29;
            return (h ^ x) * 0xbf58476d1ce4e5b9ull;
        };
        std::uint64_t h = k.meta;
        h = mix(h, static_cast<std::uint64_t>(k.a));
        h = mix(h, static_cast<std::uint64_t>(k.a >> 64));
        h = mix(h, static_cast<std::uint64_t>(k.b));
        h = mix(h, static_cast<std::uint64_t>(k.b >> 64));
        return static_cast<std::size_t>(h);
    }
};

/// Bitmask view of a board plus its axis-permutation automorphisms.
struct BoardInfo {
    const Board* board = nullptr;
    int n = 0;
    std::vector<Mask> up;     // strictly above i
    std::vector<Mask> covers; // elements covering i
    std::vector<Mask> levelUpTo; // elements with level <= L (indexed by level)
    int root = -1;
    std::vector<std::vector<int>> perms; // non-identity automorphisms

    BoardInfo(const Board& b, bool canonicalize) : board(&b), n(b.size())
    {
        if (n > 128) throw ResourceLimitError("board has more than 128 elements", 0);
        up.assign(static_cast<std::size_t>(n), 0);
        covers.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (b.lt(i, j)) up[static_cast<std::size_t>(i)] |= bit(j);
            }
            for (int c : b.covers(i)) covers[static_cast<std::size_t>(i)] |= bit(c);
        }
        levelUpTo.assign(static_cast<std::size_t>(b.maxLevel() + 1), 0);
        for (int L = 0; L <= b.maxLevel(); ++L) {
            for (int i = 0; i < n; ++i) {
                if (b.level(i) <= L) levelUpTo[static_cast<std::size_t>(L)] |= bit(i);
            }
        }
        if (auto r = b.poset().root()) root = b.indexOf(*r);
        if (canonicalize) buildPerms();
    }

    void buildPerms()
    {
        const int d = board->poset().dimension();
        if (d > 6 || n == 0) return;
        std::vector<int> axes(static_cast<std::size_t>(d));
        std::iota(axes.begin(), axes.end(), 0);
        while (std::next_permutation(axes.begin(), axes.end())) {
            std::vector<int> map(static_cast<std::size_t>(n));
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                const Element& x = board->element(i);
                std::vector<int> y(static_cast<std::size_t>(d));
                for (int a = 0; a < d; ++a) y[static_cast<std::size_t>(axes[static_cast<std::size_t>(a)])] = x[a];
                const int j = board->indexOf(Element(std::move(y)));
                if (j < 0) ok = false;
                map[static_cast<std::size_t>(i)] = j;
            }
            if (ok) perms.push_back(std::move(map));
        }
    }

    static Mask apply(const std::vector<int>& perm, Mask m)
    {
        Mask out = 0;
        while (m) {
            const auto lo = static_cast<std::uint64_t>(m);
            const int i = lo ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(m >> 64));
            out |= bit(perm[static_cast<std::size_t>(i)]);
            m &= m - 1;
        }
        return out;
    }

    Mask all() const { return n == 128 ? ~Mask(0) : bit(n) - 1; }
};

std::vector<int> bitsOf(Mask m, bool reverse)
{
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1) {
        if (m & 1) out.push_back(i);
    }
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

class SearchBase {
public:
    SearchBase(const Board& board, const GameConfig& config, const SolverOptions& options)
        : info_(board, options.canonicalize), config_(config), options_(options)
    {
        config_.validate();
        for (const auto& x : config_.initialBlockerSet) {
            const int i = board.indexOf(x);
            if (i < 0) throw DomainError("initial blocker element " + x.str() + " not in poset");
            initial_ |= bit(i);
        }
    }

protected:
    void countNode()
    {
        if (options_.nodeLimit && nodes_ >= options_.nodeLimit) {
            throw ResourceLimitError("solver node limit reached", nodes_);
        }
        ++nodes_;
    }

    template <class Map, class V>
    void remember(Map& memo, const Key& k, V v)
    {
        if (options_.memoLimit && memo.size() >= options_.memoLimit) {
            throw ResourceLimitError("solver memo limit reached", nodes_);
        }
        memo.emplace(k, v);
    }

    // Canonical (head, mask) pair; head -1 means none.
    std::pair<int, Mask> canonical(int head, Mask m) const
    {
        std::pair<int, Mask> best{head, m};
        for (const auto& p : info_.perms) {
            std::pair<int, Mask> c{head < 0 ? -1 : p[static_cast<std::size_t>(head)], BoardInfo::apply(p, m)};
            if (c < best) best = c;
        }
        return best;
    }

    std::pair<Mask, Mask> canonical2(Mask a, Mask b) const
    {
        std::pair<Mask, Mask> best{a, b};
        for (const auto& p : info_.perms) {
            std::pair<Mask, Mask> c{BoardInfo::apply(p, a), BoardInfo::apply(p, b)};
            if (c < best) best = c;
        }
        return best;
    }

    SolveResult finish(int value, int move) const
    {
        SolveResult r;
        r.value = value;
        if (move >= 0) r.move = info_.board->element(move);
        r.nodes = nodes_;
        r.memoHits = hits_;
        return r;
    }

    BoardInfo info_;
    GameConfig config_;
    SolverOptions options_;
    Mask initial_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
};

// Future builder moves in the ordered game. Positions are keyed by the head
// and the occupancy strictly above it.
class OrderedSearch : SearchBase {
public:
    using SearchBase::SearchBase;

    SolveResult run()
    {
        int bestMove = -1;
        const bool builderFirst = config_.firstPlayer == Player::builder;
        const int v = value(-1, initial_, builderFirst, builderFirst ? 1 : config_.bias, &bestMove);
        return finish(v, bestMove);
    }

private:
    Mask region(int head) const { return head < 0 ? info_.all() : info_.up[static_cast<std::size_t>(head)]; }

    int value(int head, Mask occ, bool builderToMove, int rem, int* bestMove = nullptr)
    {
        countNode();
        const Mask free = region(head) & ~occ & info_.all();
        if (!free) return 0;
        auto [ch, cm] = canonical(head, occ & region(head));
        Key k{cm, 0, static_cast<std::uint32_t>((ch + 1) | (builderToMove ? 1 << 8 : 0) | (rem << 9))};
        if (!bestMove) {
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++hits_;
                return it->second;
            }
        }
        int result = 0;
        const auto moves = bitsOf(free, options_.reverseOrder);
        if (builderToMove) {
            result = -1;
            for (int j : moves) {
                const Mask next = occ | bit(j);
                const bool full = (next & info_.all()) == info_.all();
                const int v = 1 + value(j, next, full, full ? 1 : config_.bias);
                if (v > result) {
                    result = v;
                    if (bestMove) *bestMove = j;
                }
            }
        } else {
            result = 1 << 20;
            for (int c : moves) {
                const Mask next = occ | bit(c);
                const bool full = (next & info_.all()) == info_.all();
                const bool handBack = rem == 1 || full;
                const int v = value(head, next, handBack, handBack ? 1 : rem - 1);
                if (v < result) {
                    result = v;
                    if (bestMove) *bestMove = c;
                }
                if (result == 0) break;
            }
        }
        remember(memo_, k, result);
        return result;
    }

    std::unordered_map<Key, int, KeyHash> memo_;
};

// Final longest chain of the builder in the unordered game.
class UnorderedSearch : SearchBase {
public:
    UnorderedSearch(const Board& board, const GameConfig& config, const SolverOptions& options,
                    std::optional<int> target)
        : SearchBase(board, config, options), target_(target.value_or(1 << 20))
    {
    }

    SolveResult run()
    {
        int bestMove = -1;
        const bool builderFirst = config_.firstPlayer == Player::builder;
        const int v = value(0, initial_, builderFirst, builderFirst ? 1 : config_.bias, &bestMove);
        return finish(v, bestMove);
    }

private:
    int chain(Mask maker) const
    {
        std::vector<int> best(static_cast<std::size_t>(info_.n), 0);
        int answer = 0;
        // Indices are sorted by level, so predecessors come first.
        for (int i = 0; i < info_.n; ++i) {
            if (!(maker & bit(i))) continue;
            int b = 1;
            for (int j = 0; j < i; ++j) {
                if ((maker & bit(j)) && (info_.up[static_cast<std::size_t>(j)] & bit(i))) {
                    b = std::max(b, best[static_cast<std::size_t>(j)] + 1);
                }
            }
            best[static_cast<std::size_t>(i)] = b;
            answer = std::max(answer, b);
        }
        return answer;
    }

    int value(Mask maker, Mask breaker, bool builderToMove, int rem, int* bestMove = nullptr)
    {
        countNode();
        const Mask free = info_.all() & ~(maker | breaker);
        if (!free) return std::min(chain(maker), target_);
        auto [ca, cb] = canonical2(maker, breaker);
        Key k{ca, cb, static_cast<std::uint32_t>((builderToMove ? 1 : 0) | (rem << 1))};
        if (!bestMove) {
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++hits_;
                return it->second;
            }
        }
        const auto moves = bitsOf(free, options_.reverseOrder);
        int result = 0;
        if (builderToMove) {
            result = -1;
            for (int j : moves) {
                const Mask m = maker | bit(j);
                const bool full = ((m | breaker) & info_.all()) == info_.all();
                const int v = value(m, breaker, full, full ? 1 : config_.bias);
                if (v > result) {
                    result = v;
                    if (bestMove) *bestMove = j;
                }
                if (result >= target_) break;
            }
        } else {
            result = 1 << 20;
            for (int c : moves) {
                const Mask b = breaker | bit(c);
                const bool full = ((maker | b) & info_.all()) == info_.all();
                const bool handBack = rem == 1 || full;
                const int v = value(maker, b, handBack, handBack ? 1 : rem - 1);
                if (v < result) {
                    result = v;
                    if (bestMove) *bestMove = c;
                }
            }
        }
        remember(memo_, k, result);
        return result;
    }

    int target_;
    std::unordered_map<Key, int, KeyHash> memo_;
};

// Can the builder climb an n-prefix?
class PrefixSearch : SearchBase {
public:
    PrefixSearch(const Board& board, const GameConfig& config, const SolverOptions& options, int n)
        : SearchBase(board, config, options), top_(board.minLevel() + n - 1)
    {
        if (n < 1) throw ConfigError("prefix length must be >= 1");
        if (info_.root < 0) throw ConfigError("prefix game needs a rooted poset");
        relevant_ = top_ <= board.maxLevel() ? info_.levelUpTo[static_cast<std::size_t>(top_)] : info_.all();
    }

    SolveResult run()
    {
        if (top_ > info_.board->maxLevel()) return finish(0, -1);
        int bestMove = -1;
        const bool builderFirst = config_.firstPlayer == Player::builder;
        const int rem = builderFirst ? 1 : config_.bias;
        const bool v = config_.prefixBacktrack ? wins2(0, initial_, builderFirst, rem, &bestMove)
                                               : wins(-1, initial_, builderFirst, rem, &bestMove);
        return finish(v ? 1 : 0, bestMove);
    }

private:
    bool reached(int i) const { return info_.board->level(i) >= top_; }

    // Single path: only the head can be extended.
    bool wins(int head, Mask occ, bool builderToMove, int rem, int* bestMove = nullptr)
    {
        countNode();
        if (head >= 0 && reached(head)) return true;
        const Mask region = head < 0 ? relevant_ : info_.up[static_cast<std::size_t>(head)] & relevant_;
        const Mask options = head < 0 ? bit(info_.root) : info_.covers[static_cast<std::size_t>(head)];
        if (!(options & ~occ)) return false;
        auto [ch, cm] = canonical(head, occ & region);
        Key k{cm, 0, static_cast<std::uint32_t>((ch + 1) | (builderToMove ? 1 << 8 : 0) | (rem << 9))};
        if (!bestMove) {
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++hits_;
                return it->second;
            }
        }
        bool result = false;
        if (builderToMove) {
            for (int j : bitsOf(options & ~occ, options_.reverseOrder)) {
                const Mask next = occ | bit(j);
                const bool full = (next & info_.all()) == info_.all();
                if (wins(j, next, full, full ? 1 : config_.bias)) {
                    result = true;
                    if (bestMove) *bestMove = j;
                    break;
                }
            }
        } else {
            const Mask free = region & ~occ;
            if (!free) {
                result = wins(head, occ, true, 1);
            } else {
                result = true;
                for (int c : bitsOf(free, options_.reverseOrder)) {
                    const Mask next = occ | bit(c);
                    const bool handBack = rem == 1 || (next & info_.all()) == info_.all();
                    if (!wins(head, next, handBack, handBack ? 1 : rem - 1)) {
                        result = false;
                        if (bestMove) *bestMove = c;
                        break;
                    }
                }
            }
        }
        remember(memo_, k, result);
        return result;
    }

    // Backtracking: any climbed element can be extended.
    bool wins2(Mask walker, Mask occ, bool builderToMove, int rem, int* bestMove = nullptr)
    {
        countNode();
        Mask options = 0;
        Mask region = 0;
        if (!walker) {
            options = bit(info_.root);
            region = relevant_;
        } else {
            for (int w : bitsOf(walker, false)) {
                if (reached(w)) return true;
                options |= info_.covers[static_cast<std::size_t>(w)];
                region |= info_.up[static_cast<std::size_t>(w)];
            }
            region &= relevant_;
        }
        if (!(options & ~occ)) return false;
        auto [ca, cb] = canonical2(walker, occ & ~walker & region);
        Key k{ca, cb, static_cast<std::uint32_t>((builderToMove ? 1 : 0) | (rem << 1))};
        if (!bestMove) {
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++hits_;
                return it->second;
            }
        }
        bool result = false;
        if (builderToMove) {
            for (int j : bitsOf(options & ~occ, options_.reverseOrder)) {
                const Mask next = occ | bit(j);
                const bool full = (next & info_.all()) == info_.all();
                if (wins2(walker | bit(j), next, full, full ? 1 : config_.bias)) {
                    result = true;
                    if (bestMove) *bestMove = j;
                    break;
                }
            }
        } else {
            const Mask free = region & ~occ;
            if (!free) {
                result = wins2(walker, occ, true, 1);
            } else {
                result = true;
                for (int c : bitsOf(free, options_.reverseOrder)) {
                    const Mask next = occ | bit(c);
                    const bool handBack = rem == 1 || (next & info_.all()) == info_.all();
                    if (!wins2(walker, next, handBack, handBack ? 1 : rem - 1)) {
                        result = false;
                        if (bestMove) *bestMove = c;
                        break;
                    }
                }
            }
        }
        remember(memo_, k, result);
        return result;
    }

    int top_;
    Mask relevant_ = 0;
    std::unordered_map<Key, bool, KeyHash> memo_;
};

} // namespace

SolverOptions SolverOptions::fromEnvironment()
{
    SolverOptions o;
    o.nodeLimit = envNumber("CHAINGAME_NODE_LIMIT");
    o.memoLimit = envNumber("CHAINGAME_MEMO_LIMIT");
    return o;
}

SolveResult solveOrderedValue(const Poset& poset, const GameConfig& config, const SolverOptions& options)
{
    auto board = makeBoard(std::shared_ptr<const Poset>(std::shared_ptr<const Poset>{}, &poset));
    return OrderedSearch(*board, config, options).run();
}

SolveResult solveUnorderedValue(const Poset& poset, const GameConfig& config, const SolverOptions& options,
                                std::optional<int> target)
{
    auto board = makeBoard(std::shared_ptr<const Poset>(std::shared_ptr<const Poset>{}, &poset));
    return UnorderedSearch(*board, config, options, target).run();
}

SolveResult solvePrefix(const Poset& poset, int n, const GameConfig& config, const SolverOptions& options)
{
    auto board = makeBoard(std::shared_ptr<const Poset>(std::shared_ptr<const Poset>{}, &poset));
    return PrefixSearch(*board, config, options, n).run();
}

SolveResult solveValue(const Poset& poset, const GameConfig& config, const SolverOptions& options)
{
    switch (config.variant) {
    case Variant::unordered: return solveUnorderedValue(poset, config, options);
    case Variant::ordered: return solveOrderedValue(poset, config, options);
    case Variant::prefix: {
        auto board = makeBoard(std::shared_ptr<const Poset>(std::shared_ptr<const Poset>{}, &poset));
        const int height = board->maxLevel() - board->minLevel() + 1;
        return solvePrefix(poset, config.prefixTarget.value_or(height), config, options);
    }
    }
    return {};
}

std::string solveRecordJson(const std::string& instance, const GameConfig& config, const SolveResult& result,
                            int granularity)
{
    nlohmann::ordered_json j;
    j["instance"] = instance;
    j["variant"] = std::string(toString(config.variant));
    j["bias"] = config.bias;
    if (config.firstPlayer == Player::blocker) j["first"] = "blocker";
    if (config.variant == Variant::prefix && config.prefixTarget) j["target"] = *config.prefixTarget;
    if (config.variant == Variant::prefix) j["backtrack"] = config.prefixBacktrack;
    j["value"] = result.value;
    j["nodes"] = result.nodes;
    j["granularity"] = granularity;
    return j.dump();
}

// ---------------------------------------------------------------------------

namespace {

class WorstCaseSearch {
public:
    WorstCaseSearch(std::shared_ptr<const Board> board, const SolverOptions& options)
        : info_(*board, false), options_(options)
    {
    }

    int run(GameState& s, Strategy& builder)
    {
        if (options_.nodeLimit && nodes_ >= options_.nodeLimit) {
            throw ResourceLimitError("strategy search node limit reached", nodes_);
        }
        ++nodes_;
        if (s.terminal()) return s.score();
        const int base = s.score();
        const bool memo = builder.headLocal() && s.config().variant == Variant::ordered;
        Key k;
        if (memo) {
            const int h = s.headIndex();
            const Mask region = h < 0 ? info_.all() : info_.up[static_cast<std::size_t>(h)];
            Mask occ = 0;
            int outsideFree = 0;
            for (int i = 0; i < info_.n; ++i) {
                if (s.occupied(i)) {
                    if (region & bit(i)) occ |= bit(i);
                } else if (!(region & bit(i))) {
                    ++outsideFree;
                }
            }
            k = Key{occ, static_cast<Mask>(outsideFree),
                    static_cast<std::uint32_t>((h + 1) | (s.toMove() == Player::builder ? 1 << 8 : 0)
                                               | (s.movesRemainingThisTurn() << 9))};
            if (auto it = memo_.find(k); it != memo_.end()) {
                ++hits_;
                return base + it->second;
            }
        }
        int result = 0;
        if (s.toMove() == Player::builder) {
            Element x = builder.nextMove(s, Player::builder);
            try {
                s.play(Player::builder, x);
            } catch (const RefereeError& e) {
                throw StrategyViolation(builder.name(), e);
            }
            result = run(s, builder);
        } else {
            std::vector<int> moves = s.legalMoveIndices(Player::blocker);
            if (memo) {
                // Outside the up-set one representative move suffices.
                const int h = s.headIndex();
                const Mask region = h < 0 ? info_.all() : info_.up[static_cast<std::size_t>(h)];
                std::vector<int> kept;
                bool outside = false;
                for (int c : moves) {
                    if (region & bit(c)) {
                        kept.push_back(c);
                    } else if (!outside) {
                        kept.push_back(c);
                        outside = true;
                    }
                }
                moves = std::move(kept);
            }
            result = 1 << 20;
            for (int c : moves) {
                GameState next = s;
                next.playIndex(Player::blocker, c);
                auto branch = builder.clone();
                result = std::min(result, run(next, *branch));
            }
        }
        if (memo) memo_.emplace(k, result - base);
        return result;
    }

    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;

private:
    BoardInfo info_;
    SolverOptions options_;
    std::unordered_map<Key, int, KeyHash> memo_;
};

} // namespace

SolveResult worstCaseForBuilder(std::shared_ptr<const Board> board, const Strategy& builder,
                                const GameConfig& config, const SolverOptions& options)
{
    WorstCaseSearch search(board, options);
    GameState s(board, config);
    auto b = builder.clone();
    SolveResult r;
    r.value = search.run(s, *b);
    r.nodes = search.nodes_;
    r.memoHits = search.hits_;
    return r;
}

namespace {

struct BestCaseSearch {
    const LineSearchOptions& options;
    int best = -1;
    int ceiling = 0;
    std::optional<Element> firstMove;
    std::uint64_t nodes = 0;

    int bound(const GameState& s) const
    {
        const auto& b = s.board();
        switch (s.config().variant) {
        case Variant::ordered: {
            const int h = s.headIndex();
            return s.score() + (h < 0 ? b.maxLevel() - b.minLevel() + 1 : b.maxLevel() - b.level(h));
        }
        case Variant::prefix: return ceiling;
        case Variant::unordered: break;
        }
        return ceiling;
    }

    void run(GameState& s, Strategy& blocker, const std::optional<Element>& first)
    {
        if (options.nodeLimit && nodes >= options.nodeLimit) {
            throw ResourceLimitError("line search node limit reached", nodes);
        }
        ++nodes;
        const bool pruning = options.prune && !options.onLine;
        if (pruning && best >= ceiling) return;
        const bool cut = options.maxBuilderMoves > 0
                         && static_cast<int>(s.builderOrder().size()) >= options.maxBuilderMoves;
        if (s.terminal() || cut) {
            if (options.onLine) options.onLine(s);
            if (s.score() > best) {
                best = s.score();
                firstMove = first;
            }
            return;
        }
        if (pruning && bound(s) <= best) return;
        if (s.toMove() == Player::blocker) {
            Element x = blocker.nextMove(s, Player::blocker);
            try {
                s.play(Player::blocker, x);
            } catch (const RefereeError& e) {
                throw StrategyViolation(blocker.name(), e);
            }
            run(s, blocker, first);
            return;
        }
        for (int j : s.legalMoveIndices(Player::builder)) {
            GameState next = s;
            next.playIndex(Player::builder, j);
            auto branch = blocker.clone();
            run(next, *branch, first ? first : std::optional<Element>(s.board().element(j)));
            if (pruning && best >= ceiling) return;
        }
    }
};

} // namespace

SolveResult bestCaseForBuilder(std::shared_ptr<const Board> board, const Strategy& blocker,
                               const GameConfig& config, const LineSearchOptions& options)
{
    BestCaseSearch search{options, -1, 0, std::nullopt, 0};
    search.ceiling = board->maxLevel() - board->minLevel() + 1;
    if (config.variant == Variant::prefix && config.prefixTarget) {
        search.ceiling = std::min(search.ceiling, *config.prefixTarget);
    }
    if (config.variant == Variant::unordered) search.ceiling = board->poset().maxChainSize();
    GameState s(board, config);
    auto b = blocker.clone();
    search.run(s, *b, std::nullopt);
    SolveResult r;
    r.value = search.best;
    r.move = search.firstMove;
    r.nodes = search.nodes;
    return r;
}

} // namespace chaingame
