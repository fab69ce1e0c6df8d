#pragma once

#include <memory>

#include "chaingame/angel_devil.hpp"
#include "chaingame/robust_map.hpp"

namespace chaingame {

/// Angel on the source of a robust map that shadows an Angel playing on the
/// target. Devil moves are pushed forward through the map; the target
/// Angel's reply is realized by a witness.
class TransferAngel final : public Angel {
public:
    TransferAngel(RobustMap map, std::unique_ptr<Angel> inner, bool fractional);
    TransferAngel(const TransferAngel& other);

    std::string name() const override;
    std::optional<Vertex> move(const AngelView& view) override;
    std::unique_ptr<Angel> clone() const override { return std::make_unique<TransferAngel>(*this); }

    const std::vector<Vertex>& targetPath() const { return hPath_; }
    const DamageMap& targetDamage() const { return hDamage_; }

private:
    void pushDevil(const DevilAction& g);

    RobustMap map_;
    std::unique_ptr<Angel> inner_;
    bool fractional_;
    DamageMap hDamage_;
    std::vector<Vertex> hPath_;
    DevilAction hLast_;
    bool hDevilActed_ = false;
};

std::unique_ptr<Angel> transferAngel(const RobustMap& map, std::unique_ptr<Angel> angelOnTarget);

// Source-side damage x becomes x/k on the target, clamped at 1.
std::unique_ptr<Angel> transferAngelFractional(const RobustMap& map, std::unique_ptr<Angel> angelOnTarget);

} // namespace chaingame
