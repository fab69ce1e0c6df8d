#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "chaingame/digraph.hpp"

namespace chaingame {

using Rational = boost::rational<long long>;

std::string rationalStr(const Rational& r);

/// Damage in (0,1] per vertex; absent vertices are undamaged. A vertex is
/// burned (unusable) at damage 1.
class DamageMap {
public:
    Rational damage(const Vertex& v) const;
    bool usable(const Vertex& v) const { return damage(v) < 1; }
    bool burned(const Vertex& v) const { return !usable(v); }

    // Strict: throws ContractError if x < 0 or the result would exceed 1.
    void add(const Vertex& v, const Rational& x);
    // Raises damage to min(1, current + x).
    void addClamped(const Vertex& v, const Rational& x);
    void burn(const Vertex& v) { entries_[v] = 1; }

    const std::map<Vertex, Rational>& entries() const { return entries_; }
    std::set<Vertex> burnedSet() const;

private:
    std::map<Vertex, Rational> entries_;
};

struct DevilPower {
    enum class Kind { burn, fractional };
    Kind kind = Kind::burn;
    int burns = 1;        // burn: vertices per turn
    Rational budget = 0;  // fractional: total damage per turn

    static DevilPower burning(int b) { return {Kind::burn, b, 0}; }
    static DevilPower fractional(Rational p) { return {Kind::fractional, 0, p}; }
    bool isFractional() const { return kind == Kind::fractional; }
};

/// One Devil turn: burns for a burning Devil, damage increments for a
/// fractional one. Empty means pass.
struct DevilAction {
    std::vector<Vertex> burns;
    std::vector<std::pair<Vertex, Rational>> damage;

    bool empty() const { return burns.empty() && damage.empty(); }
};

struct AngelView {
    const RootedDigraph& graph;
    const std::vector<Vertex>& path; // root .. current position
    const DamageMap& damage;
    const DevilAction* lastDevil;    // null before the Devil has acted
    int turn;                        // 1-based turn about to be played
};

struct DevilView {
    const RootedDigraph& graph;
    const std::vector<Vertex>& path;
    const DamageMap& damage;
    const DevilPower& power;
    int turn;
};

class Angel {
public:
    virtual ~Angel() = default;
    virtual std::string name() const = 0;
    // Next vertex, or nullopt to resign.
    virtual std::optional<Vertex> move(const AngelView& view) = 0;
    virtual std::unique_ptr<Angel> clone() const = 0;
};

class Devil {
public:
    virtual ~Devil() = default;
    virtual std::string name() const = 0;
    virtual DevilAction act(const DevilView& view) = 0;
    virtual std::unique_ptr<Devil> clone() const = 0;
};

/// Devil given as a pure function of the Angel's path. The burned set is
/// implied by replaying the function on every prefix of the path.
class HistoryDevil {
public:
    virtual ~HistoryDevil() = default;
    virtual std::string name() const = 0;
    virtual std::optional<Vertex> respond(std::span<const Vertex> path, const std::set<Vertex>& burned) const = 0;
};

// Burned set after the Devil answered every prefix of `path`.
std::set<Vertex> impliedBurned(const HistoryDevil& devil, std::span<const Vertex> path);

/// Blocker cases of the 2-wedge game restated for an Angel path.
class DevilWedge2 final : public HistoryDevil {
public:
    std::string name() const override { return "devil-wedge2"; }
    std::optional<Vertex> respond(std::span<const Vertex> path, const std::set<Vertex>& burned) const override;
};

std::shared_ptr<const HistoryDevil> devilWedge2();

/// Runs a HistoryDevil as a burning Devil in an Angel-Devil match.
class HistoryDevilAdapter final : public Devil {
public:
    explicit HistoryDevilAdapter(std::shared_ptr<const HistoryDevil> devil) : devil_(std::move(devil)) {}
    std::string name() const override { return devil_->name(); }
    DevilAction act(const DevilView& view) override;
    std::unique_ptr<Devil> clone() const override { return std::make_unique<HistoryDevilAdapter>(*this); }

private:
    std::shared_ptr<const HistoryDevil> devil_;
};

/// Moves to the usable out-neighbor with the most usable out-neighbors.
class GreedyAngel final : public Angel {
public:
    std::string name() const override { return "greedy-angel"; }
    std::optional<Vertex> move(const AngelView& view) override;
    std::unique_ptr<Angel> clone() const override { return std::make_unique<GreedyAngel>(*this); }
};

/// Burns (or fully damages, spending the budget in whole units) random
/// out-neighbors of the Angel.
class RandomDevil final : public Devil {
public:
    explicit RandomDevil(std::uint64_t seed) : rng_(seed) {}
    std::string name() const override { return "random-devil"; }
    DevilAction act(const DevilView& view) override;
    std::unique_ptr<Devil> clone() const override { return std::make_unique<RandomDevil>(*this); }

private:
    std::mt19937_64 rng_;
};

struct AngelDevilResult {
    int survived = 0;
    std::vector<Vertex> path;
    DamageMap damage;
};

using AngelDevilObserver = std::function<void(const std::vector<Vertex>& path, const DamageMap& damage)>;

/// Angel moves first; the match stops after `horizon` Angel moves or when
/// Angel cannot (or will not) move. Throws ContractError when either side
/// breaks the rules.
AngelDevilResult playAngelDevil(const RootedDigraph& g, Angel& angel, Devil& devil, int horizon,
                                const DevilPower& power, const AngelDevilObserver& observer = {});

// Validates and applies one Devil action.
void applyDevilAction(DamageMap& damage, const DevilAction& action, const DevilPower& power);

} // namespace chaingame
