#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chaingame/poset.hpp"

namespace chaingame {

// Integer tuple; grid games allow negative coordinates.
using Vertex = std::vector<int>;

std::string vertexStr(const Vertex& v);

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept;
};

/// Finite list of displacement vectors.
struct MoveSet {
    std::string name;
    std::vector<Vertex> moves;

    std::size_t size() const { return moves.size(); }
    bool contains(const Vertex& m) const;
};

// "1" (king moves, 8), "2" (24 moves), "wastlund" ({-2..2}x{-1..1}, 14).
MoveSet powerMoveSet(std::string_view power);

/// Rooted digraph with lazily generated out-neighbors.
class RootedDigraph {
public:
    virtual ~RootedDigraph() = default;

    virtual Vertex root() const = 0;
    // Lexicographically sorted, without duplicates.
    virtual std::vector<Vertex> outNeighbors(const Vertex& v) const = 0;
    virtual bool hasVertex(const Vertex& v) const = 0;
    virtual std::string descriptor() const = 0;
};

/// Cover digraph of the infinite d-dimensional wedge.
class WedgeDigraph final : public RootedDigraph {
public:
    explicit WedgeDigraph(int d);

    int dimension() const { return d_; }
    Vertex root() const override { return Vertex(static_cast<std::size_t>(d_), 0); }
    std::vector<Vertex> outNeighbors(const Vertex& v) const override;
    bool hasVertex(const Vertex& v) const override;
    std::string descriptor() const override { return "wedge-digraph:d=" + std::to_string(d_); }

private:
    int d_;
};

/// Z^2 with edges x -> x + m for m in the move set.
class GridDigraph final : public RootedDigraph {
public:
    explicit GridDigraph(MoveSet moves);

    const MoveSet& moves() const { return moves_; }
    Vertex root() const override { return {0, 0}; }
    std::vector<Vertex> outNeighbors(const Vertex& v) const override;
    bool hasVertex(const Vertex& v) const override { return v.size() == 2; }
    std::string descriptor() const override { return "grid:power=" + moves_.name; }

private:
    MoveSet moves_;
};

/// 0 -> 1 -> 2 -> ...
class PathDigraph final : public RootedDigraph {
public:
    Vertex root() const override { return {0}; }
    std::vector<Vertex> outNeighbors(const Vertex& v) const override;
    bool hasVertex(const Vertex& v) const override { return v.size() == 1 && v[0] >= 0; }
    std::string descriptor() const override { return "path"; }
};

class ExplicitDigraph final : public RootedDigraph {
public:
    ExplicitDigraph(Vertex root, const std::vector<std::pair<Vertex, Vertex>>& edges);

    Vertex root() const override { return root_; }
    std::vector<Vertex> outNeighbors(const Vertex& v) const override;
    bool hasVertex(const Vertex& v) const override;
    std::string descriptor() const override;

private:
    Vertex root_;
    std::map<Vertex, std::vector<Vertex>> adj_;
};

/// Cover digraph of a rooted poset.
class CoverDigraph final : public RootedDigraph {
public:
    explicit CoverDigraph(std::shared_ptr<const Poset> poset);

    const Poset& poset() const { return *poset_; }
    Vertex root() const override { return root_; }
    std::vector<Vertex> outNeighbors(const Vertex& v) const override;
    bool hasVertex(const Vertex& v) const override;
    std::string descriptor() const override { return "cover:" + poset_->descriptor(); }

private:
    std::shared_ptr<const Poset> poset_;
    Vertex root_;
};

// `wedge-digraph:d=D`, `grid:power=1|2|wastlund`, `path`, or inline JSON
// {"root": v, "edges": [[u, v], ...]} with vertices as integers or arrays.
std::shared_ptr<const RootedDigraph> parseDigraph(std::string_view descriptor);

// Vertices reachable by walks of length 1..radius from `from`, sorted.
std::vector<Vertex> reachableWithin(const RootedDigraph& g, const Vertex& from, int radius);

} // namespace chaingame
