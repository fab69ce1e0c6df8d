#include "chaingame/transfer.hpp"

#include "chaingame/errors.hpp"

namespace chaingame {

TransferAngel::TransferAngel(RobustMap map, std::unique_ptr<Angel> inner, bool fractional)
    : map_(std::move(map)), inner_(std::move(inner)), fractional_(fractional)
{
    if (map_.robustness < 1) throw ContractError("transfer needs a robust map");
}

TransferAngel::TransferAngel(const TransferAngel& other)
    : Angel(other),
      map_(other.map_),
      inner_(other.inner_->clone()),
      fractional_(other.fractional_),
      hDamage_(other.hDamage_),
      hPath_(other.hPath_),
      hLast_(other.hLast_),
      hDevilActed_(other.hDevilActed_)
{
}

std::string TransferAngel::name() const
{
    return (fractional_ ? "transfer-fractional(" : "transfer(") + map_.name + "," + inner_->name() + ")";
}

void TransferAngel::pushDevil(const DevilAction& g)
{
    hLast_ = DevilAction{};
    if (!fractional_) {
        if (!g.damage.empty()) throw ContractError("burning transfer received fractional damage");
        for (const auto& y : g.burns) {
            Vertex hy = map_.forward(y);
            if (hDamage_.burned(hy)) continue;
            hDamage_.burn(hy);
            hLast_.burns.push_back(std::move(hy));
        }
    } else {
        const Rational k = map_.robustness;
        for (const auto& y : g.burns) {
            Vertex hy = map_.forward(y);
            hDamage_.addClamped(hy, Rational(1) / k);
            hLast_.damage.emplace_back(std::move(hy), Rational(1) / k);
        }
        for (const auto& [y, x] : g.damage) {
            Vertex hy = map_.forward(y);
            hDamage_.addClamped(hy, x / k);
            hLast_.damage.emplace_back(std::move(hy), x / k);
        }
    }
    hDevilActed_ = true;
}

std::optional<Vertex> TransferAngel::move(const AngelView& view)
{
    if (hPath_.empty()) hPath_.push_back(map_.target->root());
    const Vertex& v = view.path.back();
    if (map_.forward(v) != hPath_.back()) {
        throw ConsistencyError("transfer lost track: forward" + vertexStr(v) + " != " + vertexStr(hPath_.back()));
    }
    if (view.lastDevil) pushDevil(*view.lastDevil);

    AngelView hView{*map_.target, hPath_, hDamage_, hDevilActed_ ? &hLast_ : nullptr, view.turn};
    auto w = inner_->move(hView);
    if (!w) return std::nullopt;
    if (!hDamage_.usable(*w)) throw ContractError("target Angel moved to burned vertex " + vertexStr(*w));

    const auto witnesses = map_.witnesses(v, *w);
    std::optional<Vertex> z;
    if (!fractional_) {
        for (const auto& c : witnesses) {
            if (view.damage.usable(c)) {
                z = c;
                break;
            }
        }
    } else {
        Rational total = 0;
        for (const auto& c : witnesses) {
            const Rational d = view.damage.damage(c);
            total += d;
            if (d < 1 && (!z || d < view.damage.damage(*z))) z = c;
        }
        if (total >= map_.robustness) {
            throw ConsistencyError("witnesses of " + vertexStr(*w) + " carry damage " + rationalStr(total)
                                   + " >= " + std::to_string(map_.robustness));
        }
    }
    if (!z) throw ConsistencyError("no usable witness for " + vertexStr(*w) + " from " + vertexStr(v));
    hPath_.push_back(*w);
    return z;
}

std::unique_ptr<Angel> transferAngel(const RobustMap& map, std::unique_ptr<Angel> angelOnTarget)
{
    return std::make_unique<TransferAngel>(map, std::move(angelOnTarget), false);
}

std::unique_ptr<Angel> transferAngelFractional(const RobustMap& map, std::unique_ptr<Angel> angelOnTarget)
{
    return std::make_unique<TransferAngel>(map, std::move(angelOnTarget), true);
}

} // namespace chaingame
