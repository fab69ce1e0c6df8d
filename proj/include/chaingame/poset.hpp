#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "chaingame/element.hpp"

namespace chaingame {

/// Graded poset of integer tuples under the componentwise order. The level of
/// an element is its coordinate sum. Infinite posets (untruncated wedges)
/// answer neighbor queries but refuse enumeration.
class Poset {
public:
    virtual ~Poset() = default;

    virtual int dimension() const = 0;
    virtual bool contains(const Element& x) const = 0;
    virtual bool finite() const = 0;
    virtual std::string descriptor() const = 0;

    // Size of the largest chain. ContractError when infinite.
    virtual int maxChainSize() const = 0;

    // Unique minimal element, when there is one.
    virtual std::optional<Element> root() const = 0;

    // All elements sorted by (level, lexicographic). ContractError when infinite.
    virtual std::vector<Element> elements() const;

    int level(const Element& x) const;
    std::vector<Element> covers(const Element& x) const;
    std::vector<Element> strictSuccessors(const Element& x) const;
    bool leq(const Element& x, const Element& y) const;

protected:
    void requireMember(const Element& x) const;
    virtual std::vector<Element> enumerate() const = 0;
};

/// Product of chains of sizes r_1..r_d.
class ChainProduct final : public Poset {
public:
    explicit ChainProduct(std::vector<int> sizes);

    const std::vector<int>& sizes() const { return sizes_; }
    int maxFactor() const;

    int dimension() const override { return static_cast<int>(sizes_.size()); }
    bool contains(const Element& x) const override;
    bool finite() const override { return true; }
    std::string descriptor() const override;
    int maxChainSize() const override;
    std::optional<Element> root() const override;

private:
    std::vector<Element> enumerate() const override;

    std::vector<int> sizes_;
};

/// Nonnegative d-tuples with coordinate sum < k; k absent means unbounded.
class Wedge final : public Poset {
public:
    Wedge(int dimension, std::optional<int> levels);

    std::optional<int> levels() const { return levels_; }

    int dimension() const override { return d_; }
    bool contains(const Element& x) const override;
    bool finite() const override { return levels_.has_value(); }
    std::string descriptor() const override;
    int maxChainSize() const override;
    std::optional<Element> root() const override;

private:
    std::vector<Element> enumerate() const override;

    int d_;
    std::optional<int> levels_;
};

/// Boolean lattice on d atoms with top and bottom removed, as 0/1 tuples.
class HypercubeInterior final : public Poset {
public:
    explicit HypercubeInterior(int dimension);

    int dimension() const override { return d_; }
    bool contains(const Element& x) const override;
    bool finite() const override { return true; }
    std::string descriptor() const override;
    int maxChainSize() const override { return d_ - 1; }
    std::optional<Element> root() const override;

private:
    std::vector<Element> enumerate() const override;

    int d_;
};

// `product:3x3`, `wedge:d=2,k=6`, `wedge:d=2` (unbounded), `cube-interior:d=4`.
std::shared_ptr<const Poset> parsePoset(std::string_view descriptor);

// Size of the largest totally ordered subset of `subset`; 0 when empty.
int longestChainIn(const Poset& poset, std::span<const Element> subset);

/// Finite poset with elements numbered in (level, lexicographic) order. This
/// numbering doubles as the engine's deterministic fallback order.
class Board {
public:
    explicit Board(std::shared_ptr<const Poset> poset);

    const Poset& poset() const { return *poset_; }
    std::shared_ptr<const Poset> posetPtr() const { return poset_; }

    int size() const { return static_cast<int>(elements_.size()); }
    const Element& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<Element>& elements() const { return elements_; }

    // -1 when x is not a member.
    int indexOf(const Element& x) const;

    int level(int i) const { return levels_[static_cast<std::size_t>(i)]; }
    int minLevel() const { return minLevel_; }
    int maxLevel() const { return maxLevel_; }

    const std::vector<int>& covers(int i) const { return covers_[static_cast<std::size_t>(i)]; }
    // Elements covered by i.
    const std::vector<int>& coveredBy(int i) const { return coveredBy_[static_cast<std::size_t>(i)]; }
    bool leq(int i, int j) const { return elements_[static_cast<std::size_t>(i)].below(element(j)); }
    bool lt(int i, int j) const { return i != j && leq(i, j); }

    // First index at the given level (size() when past the top).
    int levelBegin(int level) const;

private:
    std::shared_ptr<const Poset> poset_;
    std::vector<Element> elements_;
    std::vector<int> levels_;
    std::vector<std::vector<int>> covers_;
    std::vector<std::vector<int>> coveredBy_;
    std::vector<int> levelStart_;
    std::unordered_map<Element, int, ElementHash> index_;
    int minLevel_ = 0;
    int maxLevel_ = -1;
};

std::shared_ptr<const Board> makeBoard(std::shared_ptr<const Poset> poset);
std::shared_ptr<const Board> makeBoard(std::string_view descriptor);

} // namespace chaingame
