#include "chaingame/strategies.hpp"

#include <algorithm>
#include <numeric>

namespace chaingame {

namespace {

bool contains01(const Element& big, const Element& small)
{
    for (int i = 0; i < big.dimension(); ++i) {
        if (small[i] > big[i]) return false;
    }
    return true;
}

std::optional<int> freeIndex(const GameState& state, const Element& x)
{
    const int i = state.board().indexOf(x);
    if (i < 0 || state.occupied(i)) return std::nullopt;
    return i;
}

} // namespace

std::optional<Element> hypercubeStep(int d, const Element& head, std::span<const Element> blockers,
                                     const std::function<bool(const Element&)>& isFree)
{
    if (head.sum() >= d - 1) return std::nullopt;
    for (int e = 0; e < d; ++e) {
        if (head[e] != 0) continue;
        Element cand = head.shifted(e, 1);
        if (!isFree(cand)) continue;
        const bool covered = std::any_of(blockers.begin(), blockers.end(),
                                         [&](const Element& b) { return contains01(b, cand); });
        if (!covered) return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Element HypercubeWalker::nextMove(const GameState& state, Player me)
{
    const Element head = state.head().value_or(Element::zero(d_));
    const auto blockers = state.blockerSet();
    auto next = hypercubeStep(d_, head, blockers, [&](const Element& x) { return !state.occupied(x); });
    if (!next) {
        throw ContractError("hypercube walker reached a dead end at " + head.str());
    }
    (void)me;
    return *next;
}

// ---------------------------------------------------------------------------

ProductMaker::ProductMaker(const ChainProduct& product)
    : dec_(std::make_shared<ProductDecomposition>(decomposeProduct(product)))
{
}

std::optional<Element> ProductMaker::zMove(const GameState& state) const
{
    for (const auto& z : dec_->zChain) {
        if (!state.occupied(z)) return z;
    }
    return std::nullopt;
}

std::optional<Element> ProductMaker::blockMove(const GameState& state, const ProductBlock& block) const
{
    Element top = Element::zero(block.dimension());
    std::vector<Element> blockers;
    for (const auto& x : block.elements) {
        const int i = state.board().indexOf(x);
        const Owner o = state.owner(i);
        if (o == Owner::blocker) blockers.push_back(block.toCube(x));
        if (o == Owner::builder) {
            Element c = block.toCube(x);
            if (c.sum() > top.sum()) top = c;
        }
    }
    auto next = hypercubeStep(block.dimension(), top, blockers,
                              [&](const Element& c) { return !state.occupied(block.fromCube(c)); });
    if (!next) return std::nullopt;
    return block.fromCube(*next);
}

Element ProductMaker::nextMove(const GameState& state, Player me)
{
    const auto last = state.lastMoveBy(opponent(me));
    if (last && state.moves().back().player != me) {
        if (dec_->zIndex(*last)) {
            if (auto z = zMove(state)) return *z;
        } else if (auto j = dec_->blockOf(*last)) {
            if (auto x = blockMove(state, dec_->blocks[static_cast<std::size_t>(*j)])) return *x;
        }
    }
    // Extend the first unfinished structure: Z, then A_1, A_2, ...
    if (auto z = zMove(state)) return *z;
    for (const auto& block : dec_->blocks) {
        if (block.elements.empty()) continue;
        if (auto x = blockMove(state, block)) return *x;
    }
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

ProductBreakerPairing::ProductBreakerPairing(const ChainProduct& product)
{
    const auto dec = decomposeProduct(product);
    axis_ = dec.longAxis;
    pairs_ = product.sizes()[static_cast<std::size_t>(axis_)] / 2;
}

std::optional<Element> ProductBreakerPairing::mate(const Element& x) const
{
    const int t = x[axis_];
    if (t / 2 >= pairs_) return std::nullopt;
    return x.shifted(axis_, t % 2 == 0 ? 1 : -1);
}

Element ProductBreakerPairing::nextMove(const GameState& state, Player me)
{
    if (!state.moves().empty() && state.moves().back().player != me) {
        if (auto m = mate(state.moves().back().element)) {
            if (freeIndex(state, *m)) return *m;
        }
    }
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

Element Wedge2Walker::nextMove(const GameState& state, Player me)
{
    const auto& b = state.board();
    if (state.headIndex() < 0) {
        if (auto root = state.poset().root(); root && freeIndex(state, *root)) return *root;
        return fallbackMove(state, me);
    }
    const int h = state.headIndex();
    for (int j = b.levelBegin(b.level(h) + 1); j < b.size(); ++j) {
        if (!state.occupied(j) && b.leq(h, j)) return b.element(j);
    }
    return fallbackMove(state, me);
}

Element Wedge2Blocker::nextMove(const GameState& state, Player me)
{
    const auto last = state.lastMoveBy(opponent(me));
    if (last && last->dimension() == 2) {
        const Element right = last->shifted(0, 1);
        const Element up = last->shifted(1, 1);
        const auto& b = state.board();
        const bool rightTaken = b.indexOf(right) >= 0 && state.occupied(right);
        const bool upTaken = b.indexOf(up) >= 0 && state.occupied(up);
        if (rightTaken != upTaken) {
            if (auto i = freeIndex(state, rightTaken ? up : right)) return b.element(*i);
        } else if (!rightTaken) {
            if (auto i = freeIndex(state, right.shifted(1, 1))) return b.element(*i);
        }
    }
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

GridPotentialWalker::GridPotentialWalker(int k) : potential_(std::make_shared<GridPotential>(k)) {}

Element GridPotentialWalker::nextMove(const GameState& state, Player me)
{
    fellBack_ = false;
    const auto& pot = *potential_;
    const auto head = state.head();
    std::vector<Element> blockers;
    for (const auto& x : state.blockerSet()) {
        if (pot.inGrid(x)) blockers.push_back(x);
    }
    auto blocked = [&](const Element& c) { return !pot.inGrid(c) || state.occupied(c); };
    auto choose = [&](const Element& c) {
        Element a = c.shifted(0, 1);
        Element b = c.shifted(1, 1);
        return pot.at(blockers, a) <= pot.at(blockers, b) ? a : b;
    };
    Element c = head ? choose(*head) : Element{0, 0};
    while (c.sum() <= pot.topLevel() && pot.inGrid(c)) {
        if (!blocked(c)) {
            if (auto i = freeIndex(state, c); i && state.isLegal(me, *i)) return c;
            break;
        }
        c = choose(c);
    }
    fellBack_ = true;
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

namespace {

struct Bias3Row {
    Element head;
    std::vector<std::optional<Element>> burns;
};

const std::vector<Bias3Row>& bias3Table()
{
    static const std::vector<Bias3Row> rows = {
        {{0, 0, 0, 0, 0}, {Element{0, 1, 1, 1, 1}, Element{1, 0, 1, 1, 1}, Element{1, 1, 0, 1, 1}}},
        {{1, 0, 0, 0, 0}, {Element{2, 0, 0, 0, 0}, Element{1, 1, 1, 0, 1}, Element{1, 1, 1, 1, 0}}},
        {{1, 1, 0, 0, 0}, {Element{2, 1, 0, 0, 0}, Element{1, 2, 0, 0, 0}, std::nullopt}},
        {{1, 1, 1, 0, 0}, {Element{2, 1, 1, 0, 0}, Element{1, 2, 1, 0, 0}, Element{1, 1, 2, 0, 0}}},
    };
    return rows;
}

} // namespace

std::vector<std::optional<Element>> Wedge5Bias3Blocker::responses(const GameState& state)
{
    const auto& order = state.builderOrder();
    if (order.empty() || state.poset().dimension() != 5) return {};
    const auto& b = state.board();
    // The pattern restarts at Walker's first move after a skipped level.
    std::size_t base = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (b.level(order[i]) > b.level(order[i - 1]) + 1) base = i;
    }
    const Element& origin = b.element(order[base]);
    const Element& head = b.element(order.back());
    std::vector<int> rel(5);
    for (int i = 0; i < 5; ++i) rel[static_cast<std::size_t>(i)] = head[i] - origin[i];

    std::vector<int> perm(5);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
        return rel[static_cast<std::size_t>(x)] > rel[static_cast<std::size_t>(y)];
    });
    std::vector<int> sorted(5);
    for (int p = 0; p < 5; ++p) sorted[static_cast<std::size_t>(p)] = rel[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];

    for (const auto& row : bias3Table()) {
        if (row.head.coords() != sorted) continue;
        std::vector<std::optional<Element>> out;
        for (const auto& burn : row.burns) {
            if (!burn) {
                out.push_back(std::nullopt);
                continue;
            }
            std::vector<int> x(origin.coords());
            for (int p = 0; p < 5; ++p) x[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] += (*burn)[p];
            out.push_back(Element(std::move(x)));
        }
        return out;
    }
    return {};
}

Element Wedge5Bias3Blocker::nextMove(const GameState& state, Player me)
{
    const auto table = responses(state);
    const auto slot = static_cast<std::size_t>(state.blockerMovesThisTurn());
    if (slot < table.size() && table[slot]) {
        if (freeIndex(state, *table[slot])) return *table[slot];
    }
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

LiftBlocker::LiftBlocker(std::unique_ptr<Strategy> inner, int d, int b) : inner_(std::move(inner)), d_(d), b_(b)
{
    if (d < 1 || b < 1) throw ConfigError("lift needs d >= 1 and b >= 1");
}

LiftBlocker::LiftBlocker(const LiftBlocker& other)
    : Strategy(other), inner_(other.inner_->clone()), d_(other.d_), b_(other.b_), planes_(other.planes_)
{
}

std::shared_ptr<const Board> LiftBlocker::planeBoard(const GameState& state, int height) const
{
    auto it = planes_.find(height);
    if (it != planes_.end()) return it->second;
    auto* wedge = dynamic_cast<const Wedge*>(&state.poset());
    if (!wedge || !wedge->levels() || wedge->dimension() != d_ + 1) {
        throw ConfigError("lift needs a finite wedge of dimension " + std::to_string(d_ + 1));
    }
    auto board = makeBoard(std::make_shared<Wedge>(d_, *wedge->levels() - height));
    planes_.emplace(height, board);
    return board;
}

GameState LiftBlocker::innerView(const GameState& state) const
{
    const auto head = state.head();
    const int height = head ? (*head)[d_] : 0;
    auto project = [&](const Element& x) {
        return Element(std::vector<int>(x.coords().begin(), x.coords().begin() + d_));
    };
    std::vector<Element> walker;
    for (int i : state.builderOrder()) {
        const Element& x = state.board().element(i);
        if (x[d_] == height) walker.push_back(project(x));
    }
    std::vector<Element> blockers;
    for (int i : state.blockerIndices()) {
        const Element& x = state.board().element(i);
        if (x[d_] == height) blockers.push_back(project(x));
    }
    GameConfig cfg = state.config();
    cfg.bias = b_;
    cfg.prefixTarget.reset();
    const int remaining = std::max(1, std::min(b_, state.movesRemainingThisTurn()));
    return GameState::fromPosition(planeBoard(state, height), cfg, walker, blockers, Player::blocker, remaining);
}

Element LiftBlocker::nextMove(const GameState& state, Player me)
{
    const auto head = state.head();
    if (!head) return fallbackMove(state, me);
    if (state.blockerMovesThisTurn() == 0) {
        if (auto i = freeIndex(state, head->shifted(d_, 1))) return state.board().element(*i);
        return fallbackMove(state, me);
    }
    GameState view = innerView(state);
    if (view.terminal()) return fallbackMove(state, me);
    Element x = inner_->nextMove(view, Player::blocker);
    std::vector<int> lifted(x.coords());
    lifted.push_back((*head)[d_]);
    Element y(std::move(lifted));
    if (freeIndex(state, y)) return y;
    return fallbackMove(state, me);
}

// ---------------------------------------------------------------------------

Element GreedySuccessorBlocker::nextMove(const GameState& state, Player me)
{
    const auto& b = state.board();
    const int h = state.headIndex();
    if (h >= 0) {
        for (int j = b.levelBegin(b.level(h) + 1); j < b.size(); ++j) {
            if (!state.occupied(j) && b.leq(h, j)) return b.element(j);
        }
    }
    return fallbackMove(state, me);
}

Element LocalRandomBlocker::nextMove(const GameState& state, Player me)
{
    const auto& b = state.board();
    const int h = state.headIndex();
    std::vector<int> near;
    if (h >= 0) {
        const int top = std::min(b.maxLevel(), b.level(h) + 2);
        for (int j = b.levelBegin(b.level(h) + 1); j < b.levelBegin(top + 1); ++j) {
            if (!state.occupied(j) && b.leq(h, j)) near.push_back(j);
        }
    }
    if (near.empty()) near = state.legalMoveIndices(me);
    std::uniform_int_distribution<std::size_t> pick(0, near.size() - 1);
    return b.element(near[pick(rng_)]);
}

} // namespace chaingame
