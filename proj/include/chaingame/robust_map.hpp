#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaingame/digraph.hpp"

namespace chaingame {

/// Root-preserving vertex map G -> H with witnesses for every H-edge.
struct RobustMap {
    std::string name;
    std::shared_ptr<const RootedDigraph> source;
    std::shared_ptr<const RootedDigraph> target;
    std::function<Vertex(const Vertex&)> forward;
    // Out-neighbors z of v with forward(z) == w, lexicographic.
    std::function<std::vector<Vertex>(const Vertex& v, const Vertex& w)> witnesses;
    int robustness = 1;
};

// phi(x) = h0 + sum x_i m_i from the |M|-dimensional wedge digraph to H.
RobustMap robustMapFromMoveSet(const MoveSet& moves, std::shared_ptr<const RootedDigraph> target);

// The (kd)-wedge folded onto the d-wedge by summing coordinates i, i+d, ...
RobustMap multMap(int d, int k);

RobustMap identityMap(std::shared_ptr<const RootedDigraph> g);

// second after first; robustness multiplies.
RobustMap compose(const RobustMap& first, const RobustMap& second);

struct RobustnessReport {
    bool ok = true;
    std::optional<std::pair<Vertex, Vertex>> counterexample; // (v, w)
    int checkedEdges = 0;
};

RobustnessReport verifyKRobust(const RobustMap& map, int k, const std::vector<Vertex>& region);

// All d-tuples of nonnegative integers with coordinate sum <= maxSum.
std::vector<Vertex> wedgeRegion(int d, int maxSum);

} // namespace chaingame
