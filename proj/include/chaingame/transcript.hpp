#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chaingame/game.hpp"

namespace chaingame {

/// Replayable record of a finished (or abandoned) match.
struct Transcript {
    GameConfig config;
    std::string poset;
    std::vector<Move> moves;
    int score = 0;
    int skippedLevels = 0;
    std::uint64_t seed = 0;
};

Transcript makeTranscript(const GameState& state);

// Stable field order: config, poset, moves, score, skippedLevels, seed.
std::string toJson(const Transcript& t);
Transcript transcriptFromJson(const std::string& text);

// Re-runs the move log through the referee. Throws RefereeError on an
// illegal move and ConsistencyError if the recorded score disagrees.
GameState replay(const Transcript& t);

} // namespace chaingame
