#include "chaingame/robust_map.hpp"

#include <algorithm>
#include <set>

#include "chaingame/errors.hpp"

namespace chaingame {

RobustMap robustMapFromMoveSet(const MoveSet& moves, std::shared_ptr<const RootedDigraph> target)
{
    if (moves.moves.empty()) throw DomainError("move set is empty");
    const int d = static_cast<int>(moves.size());
    const Vertex h0 = target->root();
    for (const auto& m : moves.moves) {
        if (m.size() != h0.size()) throw DomainError("move dimension does not match the target");
    }
    RobustMap map;
    map.name = "moveset:" + moves.name;
    map.source = std::make_shared<WedgeDigraph>(d);
    map.target = target;
    map.forward = [moves, h0](const Vertex& x) {
        Vertex y = h0;
        for (std::size_t i = 0; i < moves.moves.size(); ++i) {
            for (std::size_t c = 0; c < y.size(); ++c) y[c] += x[i] * moves.moves[i][c];
        }
        return y;
    };
    map.witnesses = [moves, target, fwd = map.forward](const Vertex& v, const Vertex& w) {
        const Vertex base = fwd(v);
        Vertex delta = w;
        for (std::size_t c = 0; c < delta.size(); ++c) delta[c] -= base[c];
        if (!moves.contains(delta)) {
            throw ContractError("edge " + vertexStr(base) + " -> " + vertexStr(w) + " has displacement "
                                + vertexStr(delta) + " outside the move set");
        }
        std::vector<Vertex> out;
        if (!target->hasVertex(w)) return out;
        for (std::size_t i = 0; i < moves.moves.size(); ++i) {
            if (moves.moves[i] != delta) continue;
            Vertex z = v;
            ++z[i];
            out.push_back(std::move(z));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return map;
}

RobustMap multMap(int d, int k)
{
    if (d < 1 || k < 1) throw DomainError("multMap needs d, k >= 1");
    RobustMap map;
    map.name = "mult:" + std::to_string(d) + "," + std::to_string(k);
    map.source = std::make_shared<WedgeDigraph>(d * k);
    map.target = std::make_shared<WedgeDigraph>(d);
    map.robustness = k;
    map.forward = [d, k](const Vertex& x) {
        Vertex y(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < d; ++i) y[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(j * d + i)];
        }
        return y;
    };
    map.witnesses = [d, k, fwd = map.forward](const Vertex& v, const Vertex& w) {
        const Vertex base = fwd(v);
        std::vector<Vertex> out;
        int h = -1;
        for (int i = 0; i < d; ++i) {
            const int diff = w[static_cast<std::size_t>(i)] - base[static_cast<std::size_t>(i)];
            if (diff == 1 && h < 0) {
                h = i;
            } else if (diff != 0) {
                return out;
            }
        }
        if (h < 0) return out;
        for (int j = 0; j < k; ++j) {
            Vertex z = v;
            ++z[static_cast<std::size_t>((h + j * d) % (k * d))];
            out.push_back(std::move(z));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return map;
}

RobustMap identityMap(std::shared_ptr<const RootedDigraph> g)
{
    RobustMap map;
    map.name = "identity";
    map.source = g;
    map.target = g;
    map.forward = [](const Vertex& x) { return x; };
    map.witnesses = [g](const Vertex& v, const Vertex& w) {
        const auto out = g->outNeighbors(v);
        if (std::find(out.begin(), out.end(), w) != out.end()) return std::vector<Vertex>{w};
        return std::vector<Vertex>{};
    };
    return map;
}

RobustMap compose(const RobustMap& first, const RobustMap& second)
{
    RobustMap map;
    map.name = second.name + "*" + first.name;
    map.source = first.source;
    map.target = second.target;
    map.robustness = first.robustness * second.robustness;
    map.forward = [f = first.forward, g = second.forward](const Vertex& x) { return g(f(x)); };
    map.witnesses = [first, second](const Vertex& v, const Vertex& w) {
        std::set<Vertex> out;
        for (const auto& y : second.witnesses(first.forward(v), w)) {
            for (auto& z : first.witnesses(v, y)) out.insert(std::move(z));
        }
        return std::vector<Vertex>(out.begin(), out.end());
    };
    return map;
}

RobustnessReport verifyKRobust(const RobustMap& map, int k, const std::vector<Vertex>& region)
{
    RobustnessReport report;
    if (map.forward(map.source->root()) != map.target->root()) {
        report.ok = false;
        report.counterexample = std::make_pair(map.source->root(), map.target->root());
        return report;
    }
    for (const auto& v : region) {
        const Vertex hv = map.forward(v);
        const auto outG = map.source->outNeighbors(v);
        for (const auto& w : map.target->outNeighbors(hv)) {
            ++report.checkedEdges;
            std::set<Vertex> valid;
            for (const auto& z : map.witnesses(v, w)) {
                const bool edge = std::find(outG.begin(), outG.end(), z) != outG.end();
                if (edge && map.forward(z) == w) valid.insert(z);
            }
            if (static_cast<int>(valid.size()) < k) {
                report.ok = false;
                report.counterexample = std::make_pair(v, w);
                return report;
            }
        }
    }
    return report;
}

std::vector<Vertex> wedgeRegion(int d, int maxSum)
{
    std::vector<Vertex> out;
    Vertex x(static_cast<std::size_t>(d), 0);
    auto rec = [&](auto&& self, int axis, int left) -> void {
        if (axis == d) {
            out.push_back(x);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            x[static_cast<std::size_t>(axis)] = v;
            self(self, axis + 1, left - v);
        }
        x[static_cast<std::size_t>(axis)] = 0;
    };
    rec(rec, 0, maxSum);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace chaingame
