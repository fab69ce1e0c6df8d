#include "chaingame/potential.hpp"

#include <cmath>

#include "chaingame/errors.hpp"

namespace chaingame {

namespace {

// Pascal rows grown on demand.
const std::vector<BigInt>& pascalRow(int n)
{
    thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i < prev.size(); ++i) next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)];
}

// Sum of influences on (a,b) over cells, accumulated over the common
// denominator 2^maxSteps.
DyadicRational sumInfluence(int a, int b, std::span<const Element> cells)
{
    int maxSteps = 0;
    for (const auto& y : cells) {
        if (y[0] >= a && y[1] >= b) maxSteps = std::max(maxSteps, y[0] - a + y[1] - b);
    }
    BigInt num = 0;
    for (const auto& y : cells) {
        const int dc = y[0] - a;
        const int dd = y[1] - b;
        if (dc < 0 || dd < 0) continue;
        const int n = dc + dd;
        num += pascalRow(n)[static_cast<std::size_t>(dd)] << static_cast<unsigned>(maxSteps - n);
    }
    return DyadicRational(std::move(num), static_cast<unsigned>(maxSteps));
}

} // namespace

BigInt binomial(int n, int r)
{
    if (n < 0 || r < 0 || r > n) return 0;
    return pascalRow(n)[static_cast<std::size_t>(r)];
}

DyadicRational influence(int a, int b, int c, int d)
{
    if (a > c || b > d) return {};
    const int dc = c - a;
    const int dd = d - b;
    return DyadicRational(binomial(dc + dd, dd), static_cast<unsigned>(dc + dd));
}

DyadicRational influence(const Element& head, const Element& cell)
{
    if (head.dimension() != 2 || cell.dimension() != 2) throw DomainError("influence is defined on pairs");
    return influence(head[0], head[1], cell[0], cell[1]);
}

DyadicRational potential(std::span<const Element> blockerSet, const Element& head)
{
    if (head.dimension() != 2) throw DomainError("potential is defined on pairs");
    return sumInfluence(head[0], head[1], blockerSet);
}

std::vector<Element> outsideCells(int k)
{
    std::vector<Element> out;
    for (int c = 0; c <= 2 * k; ++c) {
        for (int d = 0; c + d <= 2 * k; ++d) {
            if (c > k || d > k) out.push_back(Element{c, d});
        }
    }
    return out;
}

DyadicRational initialOutsidePotential(int k)
{
    if (k < 1) throw DomainError("initialOutsidePotential needs k >= 1");
    const auto cells = outsideCells(k);
    return sumInfluence(0, 0, cells);
}

double initialPotentialBound(int k)
{
    return 4.0 * std::sqrt(static_cast<double>(k) * std::log(static_cast<double>(k)));
}

const DyadicRational& GridPotential::outsideAt(const Element& cell) const
{
    auto key = std::make_pair(cell[0], cell[1]);
    auto it = outsideCache_.find(key);
    if (it != outsideCache_.end()) return it->second;
    std::vector<Element> cells;
    for (int c = cell[0]; c <= 2 * k_; ++c) {
        for (int d = cell[1]; c + d <= 2 * k_; ++d) {
            if (c > k_ || d > k_) cells.push_back(Element{c, d});
        }
    }
    return outsideCache_.emplace(key, sumInfluence(cell[0], cell[1], cells)).first->second;
}

DyadicRational GridPotential::at(std::span<const Element> gridBlockers, const Element& cell) const
{
    std::vector<Element> inside;
    for (const auto& y : gridBlockers) {
        if (inGrid(y)) inside.push_back(y);
    }
    return outsideAt(cell) + sumInfluence(cell[0], cell[1], inside);
}

} // namespace chaingame
