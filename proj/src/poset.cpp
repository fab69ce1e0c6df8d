#include "chaingame/poset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <set>

#include "chaingame/errors.hpp"

namespace chaingame {

namespace {

bool levelLexLess(const Element& a, const Element& b)
{
    const int la = a.sum();
    const int lb = b.sum();
    return la != lb ? la < lb : a < b;
}

int parseInt(std::string_view text, std::string_view context)
{
    int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty()) {
        throw ConfigError("bad integer '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

// Parses "d=2,k=6" into a key/value map.
std::map<std::string, std::string> parseParams(std::string_view text, std::string_view context)
{
    std::map<std::string, std::string> out;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = text.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected key=value in " + std::string(context));
        }
        out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void enumerateWedge(int d, int remaining, std::vector<int>& prefix, std::vector<Element>& out)
{
    if (static_cast<int>(prefix.size()) == d) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        prefix.push_back(v);
        enumerateWedge(d, remaining - v, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

// ---- Poset ---------------------------------------------------------------

std::vector<Element> Poset::elements() const
{
    if (!finite()) {
        throw ContractError("cannot enumerate infinite poset " + descriptor());
    }
    auto out = enumerate();
    std::sort(out.begin(), out.end(), levelLexLess);
    return out;
}

void Poset::requireMember(const Element& x) const
{
    if (!contains(x)) {
        throw DomainError(x.str() + " is not an element of " + descriptor());
    }
}

int Poset::level(const Element& x) const
{
    requireMember(x);
    return x.sum();
}

std::vector<Element> Poset::covers(const Element& x) const
{
    requireMember(x);
    std::vector<Element> out;
    for (int i = 0; i < dimension(); ++i) {
        Element y = x.shifted(i, 1);
        if (contains(y)) out.push_back(std::move(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Element> Poset::strictSuccessors(const Element& x) const
{
    requireMember(x);
    if (!finite()) {
        throw ContractError("strict successors need a truncated poset: " + descriptor());
    }
    // Every strict successor in these posets is reachable through covers.
    std::set<Element> seen;
    std::queue<Element> frontier;
    frontier.push(x);
    while (!frontier.empty()) {
        Element cur = frontier.front();
        frontier.pop();
        for (auto& y : covers(cur)) {
            if (seen.insert(y).second) frontier.push(y);
        }
    }
    return {seen.begin(), seen.end()};
}

bool Poset::leq(const Element& x, const Element& y) const
{
    requireMember(x);
    requireMember(y);
    return x.below(y);
}

// ---- ChainProduct ----------------------------------------------------------

ChainProduct::ChainProduct(std::vector<int> sizes) : sizes_(std::move(sizes))
{
    if (sizes_.empty()) throw DomainError("chain product needs at least one factor");
    for (int r : sizes_) {
        if (r < 1) throw DomainError("chain sizes must be >= 1");
    }
}

int ChainProduct::maxFactor() const
{
    return *std::max_element(sizes_.begin(), sizes_.end());
}

bool ChainProduct::contains(const Element& x) const
{
    if (x.dimension() != dimension()) return false;
    for (int i = 0; i < dimension(); ++i) {
        if (x[i] >= sizes_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

std::string ChainProduct::descriptor() const
{
    std::string out = "product:";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i) out += 'x';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

int ChainProduct::maxChainSize() const
{
    int k = 1;
    for (int r : sizes_) k += r - 1;
    return k;
}

std::optional<Element> ChainProduct::root() const
{
    return Element::zero(dimension());
}

std::vector<Element> ChainProduct::enumerate() const
{
    std::vector<Element> out;
    std::vector<int> cur(sizes_.size(), 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (++cur[i] < sizes_[i]) break;
            cur[i] = 0;
        }
        if (i == cur.size()) break;
    }
    return out;
}

// ---- Wedge -------------------------------------------------------------------

Wedge::Wedge(int dimension, std::optional<int> levels) : d_(dimension), levels_(levels)
{
    if (d_ < 1) throw DomainError("wedge dimension must be >= 1");
    if (levels_ && *levels_ < 1) throw DomainError("wedge truncation must be >= 1");
}

bool Wedge::contains(const Element& x) const
{
    if (x.dimension() != d_) return false;
    return !levels_ || x.sum() < *levels_;
}

std::string Wedge::descriptor() const
{
    std::string out = "wedge:d=" + std::to_string(d_);
    if (levels_) out += ",k=" + std::to_string(*levels_);
    return out;
}

int Wedge::maxChainSize() const
{
    if (!levels_) throw ContractError("infinite wedge has no maximum chain");
    return *levels_;
}

std::optional<Element> Wedge::root() const
{
    return Element::zero(d_);
}

std::vector<Element> Wedge::enumerate() const
{
    std::vector<Element> out;
    std::vector<int> prefix;
    enumerateWedge(d_, *levels_ - 1, prefix, out);
    return out;
}

// ---- HypercubeInterior -----------------------------------------------------

HypercubeInterior::HypercubeInterior(int dimension) : d_(dimension)
{
    if (d_ < 2) throw DomainError("hypercube interior needs d >= 2");
    if (d_ > 20) throw DomainError("hypercube interior too large");
}

bool HypercubeInterior::contains(const Element& x) const
{
    if (x.dimension() != d_) return false;
    for (int i = 0; i < d_; ++i) {
        if (x[i] > 1) return false;
    }
    const int s = x.sum();
    return s > 0 && s < d_;
}

std::string HypercubeInterior::descriptor() const
{
    return "cube-interior:d=" + std::to_string(d_);
}

std::optional<Element> HypercubeInterior::root() const
{
    return std::nullopt;
}

std::vector<Element> HypercubeInterior::enumerate() const
{
    std::vector<Element> out;
    const unsigned full = (1u << d_) - 1u;
    for (unsigned mask = 1; mask < full; ++mask) {
        std::vector<int> c(static_cast<std::size_t>(d_));
        for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        out.emplace_back(std::move(c));
    }
    return out;
}

// ---- parsing & chains --------------------------------------------------------

std::shared_ptr<const Poset> parsePoset(std::string_view descriptor)
{
    auto colon = descriptor.find(':');
    if (colon == std::string_view::npos) {
        throw ConfigError("poset descriptor needs a kind prefix: " + std::string(descriptor));
    }
    auto kind = descriptor.substr(0, colon);
    auto body = descriptor.substr(colon + 1);
    try {
        if (kind == "product") {
            std::vector<int> sizes;
            while (true) {
                auto x = body.find('x');
                sizes.push_back(parseInt(body.substr(0, x), descriptor));
                if (x == std::string_view::npos) break;
                body.remove_prefix(x + 1);
            }
            return std::make_shared<ChainProduct>(std::move(sizes));
        }
        if (kind == "wedge") {
            auto params = parseParams(body, descriptor);
            if (!params.count("d")) throw ConfigError("wedge descriptor needs d=");
            std::optional<int> k;
            if (params.count("k")) k = parseInt(params["k"], descriptor);
            return std::make_shared<Wedge>(parseInt(params["d"], descriptor), k);
        }
        if (kind == "cube-interior") {
            auto params = parseParams(body, descriptor);
            if (!params.count("d")) throw ConfigError("cube-interior descriptor needs d=");
            return std::make_shared<HypercubeInterior>(parseInt(params["d"], descriptor));
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown poset kind: " + std::string(kind));
}

int longestChainIn(const Poset& poset, std::span<const Element> subset)
{
    std::vector<Element> sorted(subset.begin(), subset.end());
    for (const auto& x : sorted) {
        if (!poset.contains(x)) throw DomainError(x.str() + " is not in " + poset.descriptor());
    }
    std::sort(sorted.begin(), sorted.end(), levelLexLess);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // Levels strictly increase along a chain, so a DP over level order works.
    std::vector<int> best(sorted.size(), 1);
    int answer = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (sorted[j].strictlyBelow(sorted[i])) best[i] = std::max(best[i], best[j] + 1);
        }
        answer = std::max(answer, best[i]);
    }
    return answer;
}

// ---- Board -------------------------------------------------------------------

Board::Board(std::shared_ptr<const Poset> poset) : poset_(std::move(poset))
{
    elements_ = poset_->elements();
    const auto n = elements_.size();
    levels_.resize(n);
    covers_.resize(n);
    coveredBy_.resize(n);
    index_.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        index_.emplace(elements_[i], static_cast<int>(i));
        levels_[i] = elements_[i].sum();
    }
    if (n > 0) {
        minLevel_ = levels_.front();
        maxLevel_ = levels_.back();
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (int axis = 0; axis < poset_->dimension(); ++axis) {
            std::vector<int> c = elements_[i].coords();
            ++c[static_cast<std::size_t>(axis)];
            auto it = index_.find(Element(std::move(c)));
            if (it != index_.end()) {
                covers_[i].push_back(it->second);
                coveredBy_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
            }
        }
        std::sort(covers_[i].begin(), covers_[i].end());
    }
    for (auto& v : coveredBy_) std::sort(v.begin(), v.end());
    levelStart_.assign(static_cast<std::size_t>(std::max(0, maxLevel_ + 2)), static_cast<int>(n));
    for (std::size_t i = n; i-- > 0;) {
        levelStart_[static_cast<std::size_t>(levels_[i])] = static_cast<int>(i);
    }
    for (std::size_t l = levelStart_.size() - 1; l-- > 0;) {
        levelStart_[l] = std::min(levelStart_[l], levelStart_[l + 1]);
    }
}

int Board::indexOf(const Element& x) const
{
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
}

int Board::levelBegin(int level) const
{
    if (level < 0) return 0;
    if (level >= static_cast<int>(levelStart_.size())) return size();
    return levelStart_[static_cast<std::size_t>(level)];
}

std::shared_ptr<const Board> makeBoard(std::shared_ptr<const Poset> poset)
{
    return std::make_shared<const Board>(std::move(poset));
}

std::shared_ptr<const Board> makeBoard(std::string_view descriptor)
{
    return makeBoard(parsePoset(descriptor));
}

} // namespace chaingame
