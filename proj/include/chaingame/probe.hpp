#pragma once

#include <optional>
#include <string>

namespace chaingame {

/// Horizon-bounded evidence on whether a bias-b Blocker keeps Walker below
/// the full level count on the d-wedge. Never conclusive.
struct ProbeReport {
    int d = 0;
    int bias = 0;
    int horizon = 0;
    int gap() const { return d - bias; }

    // Longest prefix Walker forces against optimal play, found by exact
    // search for n = 1, 2, ... until Walker fails or the search gives up.
    std::optional<int> maxPrefix;
    bool prefixResolved = false;
    std::string prefixNote;

    // Best ordered-game score over all Walkers against a fixed Blocker.
    std::string blockerStrategy;
    std::optional<int> walkerLevelsVsStrategy;
    std::string strategyNote;

    std::string text() const;
    std::string json() const;
};

ProbeReport probeGapConjecture(int d, int bias, int horizon);

} // namespace chaingame
