#include "chaingame/digraph.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "chaingame/errors.hpp"

namespace chaingame {

std::string vertexStr(const Vertex& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept
{
    std::size_t h = v.size();
    for (int x : v) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

bool MoveSet::contains(const Vertex& m) const
{
    return std::find(moves.begin(), moves.end(), m) != moves.end();
}

MoveSet powerMoveSet(std::string_view power)
{
    int dx = 0;
    int dy = 0;
    if (power == "1") {
        dx = dy = 1;
    } else if (power == "2") {
        dx = dy = 2;
    } else if (power == "wastlund") {
        dx = 2;
        dy = 1;
    } else {
        throw ConfigError("unknown power: " + std::string(power));
    }
    MoveSet m{std::string(power), {}};
    for (int x = -dx; x <= dx; ++x) {
        for (int y = -dy; y <= dy; ++y) {
            if (x != 0 || y != 0) m.moves.push_back({x, y});
        }
    }
    return m;
}

WedgeDigraph::WedgeDigraph(int d) : d_(d)
{
    if (d < 1) throw DomainError("wedge digraph needs d >= 1");
}

bool WedgeDigraph::hasVertex(const Vertex& v) const
{
    return static_cast<int>(v.size()) == d_ && std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

std::vector<Vertex> WedgeDigraph::outNeighbors(const Vertex& v) const
{
    if (!hasVertex(v)) throw DomainError(vertexStr(v) + " is not a wedge vertex");
    std::vector<Vertex> out;
    for (int i = d_ - 1; i >= 0; --i) {
        Vertex w = v;
        ++w[static_cast<std::size_t>(i)];
        out.push_back(std::move(w));
    }
    return out;
}

GridDigraph::GridDigraph(MoveSet moves) : moves_(std::move(moves))
{
    for (const auto& m : moves_.moves) {
        if (m.size() != 2) throw DomainError("grid moves must be pairs");
    }
}

std::vector<Vertex> GridDigraph::outNeighbors(const Vertex& v) const
{
    if (v.size() != 2) throw DomainError(vertexStr(v) + " is not a grid vertex");
    std::vector<Vertex> out;
    for (const auto& m : moves_.moves) out.push_back({v[0] + m[0], v[1] + m[1]});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> PathDigraph::outNeighbors(const Vertex& v) const
{
    if (!hasVertex(v)) throw DomainError(vertexStr(v) + " is not a path vertex");
    return {{v[0] + 1}};
}

ExplicitDigraph::ExplicitDigraph(Vertex root, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : root_(std::move(root))
{
    adj_[root_];
    for (const auto& [u, v] : edges) {
        adj_[u].push_back(v);
        adj_[v];
    }
    for (auto& [u, out] : adj_) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

std::vector<Vertex> ExplicitDigraph::outNeighbors(const Vertex& v) const
{
    auto it = adj_.find(v);
    if (it == adj_.end()) throw DomainError(vertexStr(v) + " is not a vertex");
    return it->second;
}

bool ExplicitDigraph::hasVertex(const Vertex& v) const
{
    return adj_.count(v) > 0;
}

std::string ExplicitDigraph::descriptor() const
{
    nlohmann::ordered_json j;
    j["root"] = root_;
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& [u, out] : adj_) {
        for (const auto& v : out) j["edges"].push_back({u, v});
    }
    return j.dump();
}

CoverDigraph::CoverDigraph(std::shared_ptr<const Poset> poset) : poset_(std::move(poset))
{
    auto r = poset_->root();
    if (!r) throw ConfigError("cover digraph needs a rooted poset");
    root_ = r->coords();
}

bool CoverDigraph::hasVertex(const Vertex& v) const
{
    if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; })) return false;
    return static_cast<int>(v.size()) == poset_->dimension() && poset_->contains(Element(v));
}

std::vector<Vertex> CoverDigraph::outNeighbors(const Vertex& v) const
{
    if (!hasVertex(v)) throw DomainError(vertexStr(v) + " is not in " + poset_->descriptor());
    std::vector<Vertex> out;
    for (const auto& y : poset_->covers(Element(v))) out.push_back(y.coords());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Vertex vertexFromJson(const nlohmann::json& j)
{
    if (j.is_number_integer()) return {j.get<int>()};
    if (j.is_array()) return j.get<Vertex>();
    throw ConfigError("digraph vertex must be an integer or an integer array");
}

} // namespace

std::shared_ptr<const RootedDigraph> parseDigraph(std::string_view descriptor)
{
    const std::string text(descriptor);
    if (text == "path") return std::make_shared<PathDigraph>();
    if (text.starts_with("wedge-digraph:d=")) {
        try {
            std::size_t used = 0;
            const int d = std::stoi(text.substr(16), &used);
            if (used != text.size() - 16 || d < 1) throw ConfigError("");
            return std::make_shared<WedgeDigraph>(d);
        } catch (const std::exception&) {
            throw ConfigError("bad digraph descriptor: " + text);
        }
    }
    if (text.starts_with("grid:power=")) return std::make_shared<GridDigraph>(powerMoveSet(text.substr(11)));
    if (text.starts_with("{")) {
        try {
            const auto j = nlohmann::json::parse(text);
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) throw ConfigError("edges must be pairs");
                edges.emplace_back(vertexFromJson(e[0]), vertexFromJson(e[1]));
            }
            return std::make_shared<ExplicitDigraph>(vertexFromJson(j.at("root")), edges);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("bad digraph JSON: ") + e.what());
        }
    }
    throw ConfigError("unknown digraph descriptor: " + text);
}

std::vector<Vertex> reachableWithin(const RootedDigraph& g, const Vertex& from, int radius)
{
    std::set<Vertex> seen;
    std::vector<Vertex> layer{from};
    for (int step = 0; step < radius && !layer.empty(); ++step) {
        std::vector<Vertex> next;
        for (const auto& v : layer) {
            for (auto& w : g.outNeighbors(v)) {
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        layer = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace chaingame
