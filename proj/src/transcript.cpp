#include "chaingame/transcript.hpp"

#include <json.hpp>

namespace chaingame {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json elementJson(const Element& x)
{
    return ordered_json(x.coords());
}

Element elementFrom(const ordered_json& j)
{
    return Element(j.get<std::vector<int>>());
}

} // namespace

Transcript makeTranscript(const GameState& state)
{
    Transcript t;
    t.config = state.config();
    t.poset = state.poset().descriptor();
    t.moves = state.moves();
    t.score = state.score();
    t.skippedLevels = state.skippedLevels();
    t.seed = state.config().seed;
    return t;
}

std::string toJson(const Transcript& t)
{
    ordered_json config;
    config["variant"] = std::string(toString(t.config.variant));
    config["bias"] = t.config.bias;
    config["firstPlayer"] = std::string(toString(t.config.firstPlayer));
    if (t.config.prefixTarget) config["prefixTarget"] = *t.config.prefixTarget;
    if (t.config.prefixBacktrack) config["prefixBacktrack"] = true;
    if (t.config.randomFallback) config["randomFallback"] = true;
    if (!t.config.initialBlockerSet.empty()) {
        ordered_json init = ordered_json::array();
        for (const auto& x : t.config.initialBlockerSet) init.push_back(elementJson(x));
        config["initialBlockerSet"] = std::move(init);
    }

    ordered_json moves = ordered_json::array();
    for (const auto& m : t.moves) {
        ordered_json mj;
        mj["player"] = std::string(toString(m.player));
        mj["element"] = elementJson(m.element);
        mj["roundIndex"] = m.roundIndex;
        moves.push_back(std::move(mj));
    }

    ordered_json root;
    root["config"] = std::move(config);
    root["poset"] = t.poset;
    root["moves"] = std::move(moves);
    root["score"] = t.score;
    root["skippedLevels"] = t.skippedLevels;
    root["seed"] = t.seed;
    return root.dump(2) + "\n";
}

Transcript transcriptFromJson(const std::string& text)
{
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("transcript is not valid JSON: ") + e.what());
    }
    try {
        Transcript t;
        const auto& c = root.at("config");
        t.config.variant = parseVariant(c.at("variant").get<std::string>());
        t.config.bias = c.at("bias").get<int>();
        t.config.firstPlayer = parsePlayer(c.at("firstPlayer").get<std::string>());
        if (c.contains("prefixTarget")) t.config.prefixTarget = c["prefixTarget"].get<int>();
        t.config.prefixBacktrack = c.value("prefixBacktrack", false);
        t.config.randomFallback = c.value("randomFallback", false);
        if (c.contains("initialBlockerSet")) {
            for (const auto& x : c["initialBlockerSet"]) t.config.initialBlockerSet.push_back(elementFrom(x));
        }
        t.poset = root.at("poset").get<std::string>();
        for (const auto& mj : root.at("moves")) {
            t.moves.push_back(Move{parsePlayer(mj.at("player").get<std::string>()), elementFrom(mj.at("element")),
                                   mj.at("roundIndex").get<int>()});
        }
        t.score = root.at("score").get<int>();
        t.skippedLevels = root.at("skippedLevels").get<int>();
        t.seed = root.at("seed").get<std::uint64_t>();
        t.config.seed = t.seed;
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed transcript: ") + e.what());
    }
}

GameState replay(const Transcript& t)
{
    GameState state(makeBoard(t.poset), t.config);
    for (const auto& m : t.moves) {
        if (state.roundIndex() != m.roundIndex) {
            throw ConsistencyError("round index mismatch at move " + m.element.str());
        }
        state.play(m.player, m.element);
    }
    if (state.score() != t.score || state.skippedLevels() != t.skippedLevels) {
        throw ConsistencyError("replayed score differs from the transcript");
    }
    return state;
}

} // namespace chaingame
