#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "chaingame/dyadic.hpp"
#include "chaingame/element.hpp"

namespace chaingame {

// Exact binomial coefficient; 0 outside 0 <= r <= n.
BigInt binomial(int n, int r);

/// Influence of cell (c,d) on head (a,b): the probability that a random
/// walk from (a,b), raising one coordinate per step, passes through (c,d).
DyadicRational influence(int a, int b, int c, int d);
DyadicRational influence(const Element& head, const Element& cell);

// Total influence on `head` of the given blocker cells.
DyadicRational potential(std::span<const Element> blockerSet, const Element& head);

// Potential at (0,0) of every cell of the 2-wedge with sum <= 2k that lies
// outside the (k+1)x(k+1) grid.
DyadicRational initialOutsidePotential(int k);

// 4 * sqrt(k ln k).
double initialPotentialBound(int k);

// Cells of the 2-wedge of 2k+1 levels outside the (k+1)x(k+1) grid.
std::vector<Element> outsideCells(int k);

/// Potential on the (k+1)x(k+1) grid, where every out-of-grid cell of the
/// surrounding 2-wedge counts as a Blocker cell. Out-of-grid contributions
/// are cached per cell.
class GridPotential {
public:
    explicit GridPotential(int k) : k_(k) {}

    int k() const { return k_; }
    bool inGrid(const Element& x) const { return x[0] <= k_ && x[1] <= k_; }
    int topLevel() const { return 2 * k_; }

    // gridBlockers: Blocker cells inside the grid (others are ignored).
    DyadicRational at(std::span<const Element> gridBlockers, const Element& cell) const;
    const DyadicRational& outsideAt(const Element& cell) const;

private:
    int k_;
    mutable std::map<std::pair<int, int>, DyadicRational> outsideCache_;
};

} // namespace chaingame
