#include "chaingame/probe.hpp"

#include <json.hpp>

#include "chaingame/errors.hpp"
#include "chaingame/solver.hpp"
#include "chaingame/strategies.hpp"

namespace chaingame {

namespace {

constexpr std::uint64_t kProbeNodes = 4'000'000;

std::optional<std::string> strategyFor(int d, int bias)
{
    if (d == 5 && bias == 3) return "wedge5-bias3-blocker";
    if (d == 1) return "greedy-successor-blocker";
    if (d == bias + 1) {
        std::string name = "wedge2-blocker";
        for (int i = 2; i < d; ++i) name = "lift:" + name;
        return name;
    }
    return std::nullopt;
}

} // namespace

ProbeReport probeGapConjecture(int d, int bias, int horizon)
{
    if (d < 1 || bias < 1 || horizon < 1) throw ConfigError("probe needs d, bias, horizon >= 1");
    ProbeReport r;
    r.d = d;
    r.bias = bias;
    r.horizon = horizon;

    GameConfig cfg;
    cfg.variant = Variant::prefix;
    cfg.bias = bias;
    SolverOptions opts;
    opts.nodeLimit = kProbeNodes;
    int reached = 0;
    r.prefixResolved = false;
    for (int n = 1; n <= horizon; ++n) {
        try {
            auto w = std::make_shared<Wedge>(d, n);
            if (makeBoard(w)->size() > 128) {
                r.prefixNote = "prefix search stopped at n=" + std::to_string(n) + ": board too large";
                break;
            }
            if (solvePrefix(*w, n, cfg, opts).value == 0) {
                r.prefixResolved = true;
                r.prefixNote = "Walker cannot force a " + std::to_string(n) + "-prefix";
                break;
            }
            reached = n;
        } catch (const ResourceLimitError&) {
            r.prefixNote = "prefix search for n=" + std::to_string(n) + " hit the node limit";
            break;
        }
    }
    if (!r.prefixResolved && reached == horizon) {
        r.prefixResolved = true;
        r.prefixNote = "Walker forces every prefix up to the horizon";
    }
    r.maxPrefix = reached;

    if (auto name = strategyFor(d, bias)) {
        r.blockerStrategy = *name;
        GameConfig ord;
        ord.variant = Variant::ordered;
        ord.bias = bias;
        auto poset = std::make_shared<Wedge>(d, horizon);
        try {
            auto blocker = makeStrategy(*name, *poset, ord);
            LineSearchOptions lo;
            lo.nodeLimit = kProbeNodes;
            r.walkerLevelsVsStrategy = bestCaseForBuilder(makeBoard(poset), *blocker, ord, lo).value;
            r.strategyNote = "best Walker over all lines";
        } catch (const ResourceLimitError&) {
            r.strategyNote = "line search hit the node limit";
        }
    } else {
        r.strategyNote = "no explicit Blocker strategy for this (d, bias)";
    }
    return r;
}

std::string ProbeReport::text() const
{
    std::string out;
    out += "d=" + std::to_string(d) + " bias=" + std::to_string(bias) + " gap=" + std::to_string(gap())
           + " horizon=" + std::to_string(horizon) + "\n";
    out += "  longest forced prefix: " + (maxPrefix ? std::to_string(*maxPrefix) : std::string("?")) + " ("
           + prefixNote + ")\n";
    if (!blockerStrategy.empty()) {
        out += "  ordered game vs " + blockerStrategy + ": "
               + (walkerLevelsVsStrategy ? std::to_string(*walkerLevelsVsStrategy) : std::string("?")) + " of "
               + std::to_string(horizon) + " levels (" + strategyNote + ")\n";
    } else {
        out += "  " + strategyNote + "\n";
    }
    out += "  evidence only: bounded horizon, not a proof\n";
    return out;
}

std::string ProbeReport::json() const
{
    nlohmann::ordered_json j;
    j["d"] = d;
    j["bias"] = bias;
    j["gap"] = gap();
    j["horizon"] = horizon;
    j["maxPrefix"] = maxPrefix ? nlohmann::ordered_json(*maxPrefix) : nlohmann::ordered_json(nullptr);
    j["prefixResolved"] = prefixResolved;
    j["prefixNote"] = prefixNote;
    j["blockerStrategy"] = blockerStrategy;
    j["walkerLevelsVsStrategy"] =
        walkerLevelsVsStrategy ? nlohmann::ordered_json(*walkerLevelsVsStrategy) : nlohmann::ordered_json(nullptr);
    j["conclusive"] = false;
    return j.dump(2) + "\n";
}

} // namespace chaingame
