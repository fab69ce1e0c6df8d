#include "chaingame/decomposition.hpp"

#include <algorithm>

#include "chaingame/errors.hpp"

namespace chaingame {

bool ProductBlock::contains(const Element& x) const
{
    return lower.strictlyBelow(x) && x.strictlyBelow(upper);
}

Element ProductBlock::toCube(const Element& x) const
{
    if (!contains(x)) throw DomainError(x.str() + " is not in block A_" + std::to_string(index));
    std::vector<int> bits;
    bits.reserve(activeAxes.size());
    for (int axis : activeAxes) bits.push_back(x[axis] - lower[axis]);
    return Element(std::move(bits));
}

Element ProductBlock::fromCube(const Element& bits) const
{
    if (bits.dimension() != dimension()) throw DomainError("cube element has wrong dimension");
    std::vector<int> c = lower.coords();
    for (std::size_t t = 0; t < activeAxes.size(); ++t) {
        c[static_cast<std::size_t>(activeAxes[t])] += bits[static_cast<int>(t)];
    }
    return Element(std::move(c));
}

Element ProductDecomposition::toPermuted(const Element& x) const
{
    std::vector<int> c(permutation.size());
    for (std::size_t p = 0; p < permutation.size(); ++p) c[p] = x[permutation[p]];
    return Element(std::move(c));
}

Element ProductDecomposition::fromPermuted(const Element& x) const
{
    std::vector<int> c(permutation.size());
    for (std::size_t p = 0; p < permutation.size(); ++p) {
        c[static_cast<std::size_t>(permutation[p])] = x[static_cast<int>(p)];
    }
    return Element(std::move(c));
}

std::optional<int> ProductDecomposition::zIndex(const Element& x) const
{
    auto it = std::find(zChain.begin(), zChain.end(), x);
    if (it == zChain.end()) return std::nullopt;
    return static_cast<int>(it - zChain.begin());
}

std::optional<int> ProductDecomposition::blockOf(const Element& x) const
{
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].contains(x)) return static_cast<int>(b);
    }
    return std::nullopt;
}

ProductDecomposition decomposeProduct(const ChainProduct& product)
{
    const auto& sizes = product.sizes();
    const int d = product.dimension();
    const int r = product.maxFactor();

    ProductDecomposition out;
    // Last axis attaining the maximum becomes the final coordinate.
    int longAxis = 0;
    for (int i = 0; i < d; ++i) {
        if (sizes[static_cast<std::size_t>(i)] == r) longAxis = i;
    }
    out.longAxis = longAxis;
    for (int i = 0; i < d; ++i) {
        if (i != longAxis) out.permutation.push_back(i);
    }
    out.permutation.push_back(longAxis);

    for (int j = 0; j < r; ++j) {
        std::vector<int> c(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = std::min(j, sizes[static_cast<std::size_t>(i)] - 1);
        out.zChain.emplace_back(std::move(c));
    }

    for (int j = 1; j < r; ++j) {
        ProductBlock block;
        block.index = j;
        block.lower = out.zChain[static_cast<std::size_t>(j - 1)];
        block.upper = out.zChain[static_cast<std::size_t>(j)];
        for (int i = 0; i < d; ++i) {
            if (j < sizes[static_cast<std::size_t>(i)]) block.activeAxes.push_back(i);
        }
        const int m = block.dimension();
        const unsigned full = (1u << m) - 1u;
        for (unsigned mask = 1; m >= 2 && mask < full; ++mask) {
            std::vector<int> bits(static_cast<std::size_t>(m));
            for (int t = 0; t < m; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1u;
            block.elements.push_back(block.fromCube(Element(std::move(bits))));
        }
        std::sort(block.elements.begin(), block.elements.end(), [](const Element& a, const Element& b) {
            return a.sum() != b.sum() ? a.sum() < b.sum() : a < b;
        });
        out.blocks.push_back(std::move(block));
    }
    return out;
}

} // namespace chaingame
