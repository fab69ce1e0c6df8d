#pragma once

#include <optional>
#include <vector>

#include "chaingame/element.hpp"
#include "chaingame/poset.hpp"

namespace chaingame {

/// The open interval A_j = {x : z_{j-1} < x < z_j} of a chain product,
/// identified with a hypercube interior on the axes that still grow at j.
struct ProductBlock {
    int index = 0;               // j, 1-based
    Element lower;               // z_{j-1}
    Element upper;               // z_j
    std::vector<int> activeAxes; // axes i with j < r_i, increasing
    std::vector<Element> elements;

    int dimension() const { return static_cast<int>(activeAxes.size()); }
    bool contains(const Element& x) const;

    // Order-isomorphism onto HypercubeInterior(dimension()).
    Element toCube(const Element& x) const;
    Element fromCube(const Element& bits) const;
};

struct ProductDecomposition {
    // permutation[p] = original axis placed at position p; the longest
    // factor ends up last.
    std::vector<int> permutation;
    int longAxis = 0;
    std::vector<Element> zChain;      // z_0 .. z_{r-1}, original coordinates
    std::vector<ProductBlock> blocks; // A_1 .. A_{r-1}

    Element toPermuted(const Element& x) const;
    Element fromPermuted(const Element& x) const;

    // Index j with x == z_j.
    std::optional<int> zIndex(const Element& x) const;
    // Block containing x, as a 0-based position in `blocks`.
    std::optional<int> blockOf(const Element& x) const;
};

ProductDecomposition decomposeProduct(const ChainProduct& product);

} // namespace chaingame
