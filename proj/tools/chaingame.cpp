// chaingame: play matches, solve small instances, verify the paper's results,
// compute potentials and run gap probes.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chaingame/angel_solver.hpp"
#include "chaingame/errors.hpp"
#include "chaingame/potential.hpp"
#include "chaingame/probe.hpp"
#include "chaingame/solver.hpp"
#include "chaingame/strategies.hpp"
#include "chaingame/verify.hpp"

using namespace chaingame;

namespace {

enum Exit { ok = 0, config = 1, contract = 2, verification = 3, resource = 4 };

void writeFile(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
}

std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "0,0;1,1;2,0"
std::vector<Element> parseMoveList(const std::string& text)
{
    std::vector<Element> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        std::vector<int> coords;
        std::stringstream cs(item);
        std::string c;
        while (std::getline(cs, c, ',')) {
            try {
                coords.push_back(std::stoi(c));
            } catch (const std::exception&) {
                throw ConfigError("bad coordinate '" + c + "' in --moves");
            }
        }
        out.emplace_back(std::move(coords));
    }
    return out;
}

void printTranscript(const Transcript& t)
{
    std::cout << "poset " << t.poset << ", " << toString(t.config.variant) << ", bias " << t.config.bias
              << ", " << toString(t.config.firstPlayer) << " first, seed " << t.seed << "\n";
    for (const auto& m : t.moves) {
        std::cout << std::setw(4) << m.roundIndex << "  " << std::left << std::setw(8) << toString(m.player)
                  << std::right << m.element.str() << "\n";
    }
    std::cout << "score " << t.score;
    if (t.config.variant == Variant::ordered) std::cout << ", skipped levels " << t.skippedLevels;
    std::cout << "\n";
}

struct PlayArgs {
    std::string poset;
    std::string variant = "ordered";
    std::string builder = "fallback";
    std::string blocker = "fallback";
    int bias = 1;
    std::string first = "builder";
    std::uint64_t seed = 0;
    std::optional<int> target;
    bool backtrack = false;
    bool randomFallback = false;
    std::string out;
    std::string moves;
    std::string replayPath;
};

int runPlay(const PlayArgs& a)
{
    if (!a.replayPath.empty()) {
        const std::string text = readFile(a.replayPath);
        auto t = transcriptFromJson(text);
        auto state = replay(t);
        auto again = makeTranscript(state);
        again.seed = t.seed;
        printTranscript(again);
        const bool same = toJson(again) == text;
        std::cout << "replay " << (same ? "byte-identical" : "differs from the file") << "\n";
        if (!a.out.empty()) writeFile(a.out, toJson(again));
        return same ? ok : verification;
    }
    if (a.poset.empty()) throw ConfigError("--poset is required");
    auto poset = parsePoset(a.poset);
    GameConfig cfg;
    cfg.variant = parseVariant(a.variant);
    cfg.bias = a.bias;
    cfg.firstPlayer = parsePlayer(a.first);
    cfg.seed = a.seed;
    cfg.prefixTarget = a.target;
    cfg.prefixBacktrack = a.backtrack;
    cfg.randomFallback = a.randomFallback;
    if (a.builder == "grid-potential-walker") {
        if (auto w = std::dynamic_pointer_cast<const Wedge>(poset); w && w->levels() && *w->levels() % 2 == 1) {
            cfg.initialBlockerSet = outsideCells(*w->levels() / 2);
        }
    }
    cfg.validate();

    Transcript t;
    if (!a.moves.empty()) {
        GameState s(makeBoard(poset), cfg);
        for (const auto& x : parseMoveList(a.moves)) {
            if (s.terminal()) throw ConfigError("--moves continues past the end of the game");
            s.play(s.toMove(), x);
        }
        t = makeTranscript(s);
    } else {
        auto builder = makeStrategy(a.builder, *poset, cfg);
        auto blocker = makeStrategy(a.blocker, *poset, cfg);
        t = playMatch(poset, *builder, *blocker, cfg);
    }
    printTranscript(t);
    if (!a.out.empty()) writeFile(a.out, toJson(t));
    return ok;
}

struct SolveArgs {
    std::string poset;
    std::string variant = "ordered";
    int bias = 1;
    std::string first = "builder";
    std::optional<int> target;
    int granularity = 1;
    std::optional<std::string> fractional;
    bool backtrack = false;
    std::string out;
};

Rational parseRational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("bad rational '" + text + "'");
    }
}

int runSolve(const SolveArgs& a)
{
    if (a.poset.empty()) throw ConfigError("--poset is required");
    std::string record;
    if (a.variant == "angel") {
        if (!a.target) throw ConfigError("angel solving needs --target (the horizon)");
        auto g = parseDigraph(a.poset);
        const auto power = a.fractional ? DevilPower::fractional(parseRational(*a.fractional))
                                        : DevilPower::burning(a.bias);
        auto r = solveAngelSurvival(g, *a.target, power, a.granularity);
        std::cout << g->descriptor() << " angel horizon " << *a.target << " vs "
                  << (a.fractional ? "fractional " + *a.fractional : "burning " + std::to_string(a.bias))
                  << " Devil: survives " << r.value << " turns";
        if (r.move) std::cout << ", first move " << vertexStr(*r.move);
        std::cout << " (" << r.nodes << " nodes, granularity 1/" << r.granularity << ")\n";
        nlohmann::ordered_json j;
        j["instance"] = g->descriptor();
        j["variant"] = "angel";
        j["bias"] = a.bias;
        j["devil"] = a.fractional ? "fractional:" + *a.fractional : "burn:" + std::to_string(a.bias);
        j["horizon"] = *a.target;
        j["value"] = r.value;
        j["nodes"] = r.nodes;
        j["granularity"] = r.granularity;
        record = j.dump();
    } else {
        auto poset = parsePoset(a.poset);
        GameConfig cfg;
        cfg.variant = parseVariant(a.variant);
        cfg.bias = a.bias;
        cfg.firstPlayer = parsePlayer(a.first);
        cfg.prefixBacktrack = a.backtrack;
        SolveResult r;
        if (cfg.variant == Variant::unordered) {
            cfg.validate();
            r = solveUnorderedValue(*poset, cfg, SolverOptions::fromEnvironment(), a.target);
        } else {
            if (cfg.variant == Variant::prefix) cfg.prefixTarget = a.target;
            cfg.validate();
            r = solveValue(*poset, cfg);
        }
        std::cout << poset->descriptor() << " " << a.variant << " bias " << a.bias << ": value " << r.value;
        if (r.move) std::cout << ", optimal first move " << r.move->str();
        std::cout << " (" << r.nodes << " nodes, " << r.memoHits << " memo hits)\n";
        record = solveRecordJson(poset->descriptor(), cfg, r, a.granularity);
    }
    if (!a.out.empty()) writeFile(a.out, record + "\n");
    return ok;
}

int runVerify(const std::string& id)
{
    std::vector<std::string> ids;
    if (id == "all") {
        ids = theoremIds();
    } else {
        ids.push_back(id);
    }
    bool all = true;
    double total = 0;
    for (const auto& one : ids) {
        auto r = runVerification(one);
        std::cout << r.text() << std::flush;
        std::cerr << one << ": " << std::fixed << std::setprecision(1) << r.seconds << " s\n";
        total += r.seconds;
        all = all && r.passed();
    }
    std::cout << (all ? "PASS" : "FAIL") << " " << id << "\n";
    std::cerr << "total " << std::fixed << std::setprecision(1) << total << " s\n";
    return all ? ok : verification;
}

int runPotential(int k, bool initialOutside)
{
    if (k < 1) throw ConfigError("--k must be >= 1");
    auto show = [](const DyadicRational& v) {
        std::ostringstream os;
        os << v.str() << " (" << std::setprecision(12) << v.toDouble() << ")";
        return os.str();
    };
    if (initialOutside) {
        const auto v = initialOutsidePotential(k);
        std::cout << show(v);
        if (k >= 2) {
            std::cout << " < " << std::fixed << std::setprecision(6) << initialPotentialBound(k) << "…";
        }
        std::cout << "\n";
        return ok;
    }
    if (k > 12) throw ConfigError("the cell table is limited to k <= 12");
    GridPotential gp(k);
    for (int level = 0; level <= 2 * k; ++level) {
        for (int a = std::max(0, level - k); a <= std::min(level, k); ++a) {
            const Element cell{a, level - a};
            std::cout << cell.str() << " " << show(gp.outsideAt(cell)) << "\n";
        }
    }
    return ok;
}

int runProbe(int gap, int d, int horizon, bool json)
{
    const int bias = d - gap;
    if (bias < 1) throw ConfigError("gap must be smaller than d");
    auto r = probeGapConjecture(d, bias, horizon);
    std::cout << (json ? r.json() : r.text());
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chain games on posets: play, solve, verify, potential, probe"};
    app.require_subcommand(1);

    PlayArgs play;
    auto* playCmd = app.add_subcommand("play", "Run a match and print its transcript");
    playCmd->add_option("--poset", play.poset, "product:AxB.., wedge:d=D,k=K, cube-interior:d=D");
    playCmd->add_option("--variant", play.variant, "unordered | ordered | prefix");
    playCmd->add_option("--builder", play.builder, "builder strategy");
    playCmd->add_option("--blocker", play.blocker, "blocker strategy");
    playCmd->add_option("--bias", play.bias, "blocker moves per turn");
    playCmd->add_option("--first", play.first, "builder | blocker");
    playCmd->add_option("--seed", play.seed, "seed for random fallbacks");
    playCmd->add_option("--target", play.target, "prefix length that ends the prefix game");
    playCmd->add_flag("--backtrack", play.backtrack, "prefix game: Walker may extend any climbed prefix");
    playCmd->add_flag("--random-fallback", play.randomFallback, "seeded random instead of lowest move");
    playCmd->add_option("--out", play.out, "write the transcript as JSON");
    playCmd->add_option("--moves", play.moves, "play these moves in turn order, e.g. \"0,0;1,1\"");
    playCmd->add_option("--replay", play.replayPath, "replay a transcript file");

    SolveArgs solve;
    auto* solveCmd = app.add_subcommand("solve", "Exact game value of a small instance");
    solveCmd->add_option("--poset", solve.poset, "poset, or a digraph descriptor for --variant angel");
    solveCmd->add_option("--variant", solve.variant, "unordered | ordered | prefix | angel");
    solveCmd->add_option("--bias", solve.bias, "blocker moves per turn (burns for angel)");
    solveCmd->add_option("--first", solve.first, "builder | blocker");
    solveCmd->add_option("--target", solve.target, "chain cap, prefix length, or angel horizon");
    solveCmd->add_option("--granularity", solve.granularity, "fractional damage unit 1/q");
    solveCmd->add_option("--fractional", solve.fractional, "fractional Devil budget, e.g. 1 or 3/2");
    solveCmd->add_flag("--backtrack", solve.backtrack, "prefix game: Walker may extend any climbed prefix");
    solveCmd->add_option("--out", solve.out, "write the JSON record");

    std::string theorem;
    auto* verifyCmd = app.add_subcommand("verify", "Run a verification bundle");
    verifyCmd->add_option("theorem", theorem, "chainprod | hypercube | wedge2 | mainthm | mb-ad-equiv | "
                                              "movetrick | mult | kmap | bias3 | gap | all")
        ->required();

    int k = 0;
    bool initialOutside = false;
    auto* potCmd = app.add_subcommand("potential", "Exact potentials on the (k+1)x(k+1) grid");
    potCmd->add_option("--k", k, "grid parameter")->required();
    potCmd->add_flag("--initial-outside", initialOutside, "potential at (0,0) of all out-of-grid cells");

    int gap = 0, d = 0, horizon = 0;
    bool json = false;
    auto* probeCmd = app.add_subcommand("probe", "Bounded evidence on biased wedge games");
    probeCmd->add_option("--gap", gap, "d - bias")->required();
    probeCmd->add_option("--d", d, "wedge dimension")->required();
    probeCmd->add_option("--horizon", horizon, "levels")->required();
    probeCmd->add_flag("--json", json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config;
    }

    try {
        if (*playCmd) return runPlay(play);
        if (*solveCmd) return runSolve(solve);
        if (*verifyCmd) return runVerify(theorem);
        if (*potCmd) return runPotential(k, initialOutside);
        if (*probeCmd) return runProbe(gap, d, horizon, json);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << " after " << e.nodes() << " nodes\n";
        return resource;
    } catch (const RefereeError& e) {
        std::cerr << "rule violation: " << e.what() << "\n";
        return contract;
    } catch (const ContractError& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return contract;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return verification;
    } catch (const ConfigError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return config;
    } catch (const DomainError& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return config;
    }
    return ok;
}
