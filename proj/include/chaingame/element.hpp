#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace chaingame {

/// A d-tuple of nonnegative integers. Ordering is lexicographic and is the
/// canonical tie-break order used everywhere in the library.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<int> coords);
    Element(std::initializer_list<int> coords);

    static Element zero(int dimension);
    static Element unit(int dimension, int axis);

    int dimension() const { return static_cast<int>(coords_.size()); }
    int operator[](int axis) const { return coords_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& coords() const { return coords_; }

    int sum() const;

    // Copy with coordinate `axis` shifted by `delta`; throws DomainError if it
    // would go negative.
    Element shifted(int axis, int delta = 1) const;

    // Componentwise order.
    bool below(const Element& other) const;
    bool strictlyBelow(const Element& other) const { return below(other) && *this != other; }

    std::string str() const;  // "(1,2,0)"
    std::string json() const; // "[1,2,0]"

    auto operator<=>(const Element&) const = default;
    bool operator==(const Element&) const = default;

private:
    std::vector<int> coords_;
};

struct ElementHash {
    std::size_t operator()(const Element& x) const noexcept;
};

} // namespace chaingame
