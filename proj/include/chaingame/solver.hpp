#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "chaingame/game.hpp"
#include "chaingame/strategy.hpp"

namespace chaingame {

struct SolveResult {
    int value = 0;
    std::optional<Element> move; // an optimal first move, when the builder moves first
    std::uint64_t nodes = 0;
    std::uint64_t memoHits = 0;
};

struct SolverOptions {
    bool canonicalize = true;
    // Reverse the move ordering (for order-independence checks).
    bool reverseOrder = false;
    // 0 = unlimited. Defaults come from CHAINGAME_NODE_LIMIT and
    // CHAINGAME_MEMO_LIMIT.
    std::uint64_t nodeLimit = 0;
    std::uint64_t memoLimit = 0;

    static SolverOptions fromEnvironment();
};

// Boards are limited to 128 elements.
SolveResult solveOrderedValue(const Poset& poset, const GameConfig& config,
                              const SolverOptions& options = SolverOptions::fromEnvironment());

// With a target t the value is min(score, t), which allows early cutoffs.
SolveResult solveUnorderedValue(const Poset& poset, const GameConfig& config,
                                const SolverOptions& options = SolverOptions::fromEnvironment(),
                                std::optional<int> target = std::nullopt);

// value 1 iff Walker can force an n-prefix (config.prefixBacktrack decides
// whether Walker may extend earlier prefixes).
SolveResult solvePrefix(const Poset& poset, int n, const GameConfig& config,
                        const SolverOptions& options = SolverOptions::fromEnvironment());

// Dispatch on config.variant; prefix uses config.prefixTarget or the full height.
SolveResult solveValue(const Poset& poset, const GameConfig& config,
                       const SolverOptions& options = SolverOptions::fromEnvironment());

// {instance, variant, bias, value, nodes, granularity}
std::string solveRecordJson(const std::string& instance, const GameConfig& config, const SolveResult& result,
                            int granularity = 1);

/// Searches every Blocker reply to a fixed builder strategy and returns the
/// builder's worst score. Head-local builders are memoized on the head and
/// the occupancy above it.
SolveResult worstCaseForBuilder(std::shared_ptr<const Board> board, const Strategy& builder,
                                const GameConfig& config,
                                const SolverOptions& options = SolverOptions::fromEnvironment());

struct LineSearchOptions {
    // Stop a line after this many builder moves (0 = play to the end).
    int maxBuilderMoves = 0;
    // Ordered/prefix games: skip lines that cannot beat the best score so far.
    bool prune = true;
    // Called on every finished line (disables pruning).
    std::function<void(const GameState&)> onLine;
    std::uint64_t nodeLimit = 0;
};

/// Searches every builder line against a fixed Blocker strategy and returns
/// the builder's best score.
SolveResult bestCaseForBuilder(std::shared_ptr<const Board> board, const Strategy& blocker,
                               const GameConfig& config, const LineSearchOptions& options = {});

} // namespace chaingame
