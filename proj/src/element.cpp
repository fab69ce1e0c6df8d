#include "chaingame/element.hpp"

#include <numeric>

#include "chaingame/errors.hpp"

namespace chaingame {

namespace {

void requireNonnegative(const std::vector<int>& coords)
{
    for (int c : coords) {
        if (c < 0) {
            throw DomainError("element coordinates must be nonnegative");
        }
    }
}

} // namespace

Element::Element(std::vector<int> coords) : coords_(std::move(coords))
{
    requireNonnegative(coords_);
}

Element::Element(std::initializer_list<int> coords) : coords_(coords)
{
    requireNonnegative(coords_);
}

Element Element::zero(int dimension)
{
    return Element(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

Element Element::unit(int dimension, int axis)
{
    std::vector<int> c(static_cast<std::size_t>(dimension), 0);
    c.at(static_cast<std::size_t>(axis)) = 1;
    return Element(std::move(c));
}

int Element::sum() const
{
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

Element Element::shifted(int axis, int delta) const
{
    std::vector<int> c = coords_;
    c.at(static_cast<std::size_t>(axis)) += delta;
    return Element(std::move(c));
}

bool Element::below(const Element& other) const
{
    if (other.coords_.size() != coords_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] > other.coords_[i]) {
            return false;
        }
    }
    return true;
}

std::string Element::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out + ")";
}

std::string Element::json() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out + "]";
}

std::size_t ElementHash::operator()(const Element& x) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (int c : x.coords()) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

} // namespace chaingame
