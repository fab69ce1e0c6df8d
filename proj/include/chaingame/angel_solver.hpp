#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chaingame/angel_devil.hpp"

namespace chaingame {

struct AngelSolveResult {
    int value = 0;
    std::optional<Vertex> move;
    std::uint64_t nodes = 0;
    std::uint64_t memoHits = 0;
    int granularity = 1;
};

/// Horizon-bounded Angel-Devil search. Damage is counted in units of
/// 1/granularity; a fractional Devil spends budget*granularity units per
/// turn. Only maximal Devil actions on vertices the Angel can still reach
/// are tried, since extra damage never helps the Angel.
class AngelSolver {
public:
    AngelSolver(std::shared_ptr<const RootedDigraph> g, DevilPower power, int granularity = 1,
                std::uint64_t nodeLimit = 0);

    const RootedDigraph& graph() const { return *g_; }
    const DevilPower& power() const { return power_; }
    int granularity() const { return q_; }

    // Largest t <= horizon such that the Angel, to move at `position`,
    // can make t more moves.
    int value(const Vertex& position, const DamageMap& damage, int horizon);
    // Best out-neighbor (lexicographically first among equals) and the
    // number of moves it guarantees, counting itself.
    std::pair<std::optional<Vertex>, int> bestMove(const Vertex& position, const DamageMap& damage, int horizon);

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t memoHits() const { return hits_; }

    // All maximal Devil actions confined to `targets`.
    std::vector<DevilAction> devilActions(const std::vector<Vertex>& targets, const DamageMap& damage) const;
    // Vertices reachable from v by walks of length 1..t, nearest first.
    const std::vector<Vertex>& relevant(const Vertex& v, int t);

private:
    using Units = std::map<Vertex, int>;

    Units toUnits(const DamageMap& damage) const;
    bool canSurvive(const Vertex& v, const Units& d, int t);
    bool devilCannotStop(const Vertex& u, const Units& d, int t);
    void forEachAction(const std::vector<Vertex>& targets, const Units& d,
                       const std::function<bool(const Units&)>& visit) const;
    std::vector<int> key(const Vertex& v, const Units& d, int t);

    std::shared_ptr<const RootedDigraph> g_;
    DevilPower power_;
    int q_;
    int unitsPerTurn_;
    std::uint64_t nodeLimit_;
    std::uint64_t nodes_ = 0;
    std::uint64_t hits_ = 0;
    std::map<std::pair<Vertex, int>, std::vector<Vertex>> relevant_;
    std::unordered_map<std::vector<int>, bool, VertexHash> memo_;
};

AngelSolveResult solveAngelSurvival(std::shared_ptr<const RootedDigraph> g, int horizon, const DevilPower& power,
                                    int granularity = 1);

/// Angel that plays the solver's best move for a fixed horizon. The solver
/// cache is shared between clones.
class SolverAngel final : public Angel {
public:
    SolverAngel(std::shared_ptr<const RootedDigraph> g, DevilPower power, int granularity, int horizon);

    std::string name() const override { return "solver-angel"; }
    std::optional<Vertex> move(const AngelView& view) override;
    std::unique_ptr<Angel> clone() const override { return std::make_unique<SolverAngel>(*this); }

private:
    std::shared_ptr<AngelSolver> solver_;
    int horizon_;
};

/// Fewest moves the given Angel makes against any Devil that plays maximal
/// actions on vertices the Angel can still reach.
struct WorstCase {
    int survived = 0;
    std::uint64_t lines = 0;
    std::vector<Vertex> worstPath;
};

WorstCase worstCaseSurvival(const RootedDigraph& g, const Angel& angel, int horizon, const DevilPower& power,
                            int granularity = 1);

} // namespace chaingame
