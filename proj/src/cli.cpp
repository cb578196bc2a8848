#include "josnim/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "josnim/closed_form.hpp"
#include "josnim/engine.hpp"
#include "josnim/errors.hpp"
#include "josnim/game.hpp"
#include "josnim/josephus.hpp"
#include "josnim/session.hpp"
#include "josnim/verify.hpp"

namespace josnim::cli {

namespace {

using nlohmann::json;

json position_json(Position p) { return {{"x", p.x}, {"y", p.y}}; }

json class_json(const GrundyClass& c) {
    const auto [a, b] = c.params();
    const bool n = c.tag() == 'N';
    return {{"s", c.s()}, {"family", std::string(1, c.tag())}, {n ? "n" : "k", a}, {n ? "m" : "j", b}};
}

struct Output {
    std::ostream& out;
    bool as_json = false;

    void emit(const std::string& command, json inputs, json results, const std::string& text,
              json report = nullptr) const {
        if (as_json) {
            out << json{{"command", command}, {"inputs", inputs}, {"results", results}, {"report", report}}.dump(2)
                << "\n";
        } else {
            out << text;
        }
    }
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::uint64_t> x_max;
    std::optional<std::uint64_t> y_max;
    std::optional<std::uint64_t> v_max;
    std::optional<std::uint64_t> s_max;
    unsigned threads = 0;
};

const std::vector<std::string> suites{"grundy", "partition", "moves", "correspondence", "josephus", "inclusions", "all"};

int run_verify(const VerifyArgs& a, const Output& o) {
    const SweepOptions opts{a.threads};
    const bool all = a.suite == "all";
    std::vector<VerificationReport> reports;
    if (all || a.suite == "grundy")
        reports.push_back(verify_grundy_equivalence(a.x_max.value_or(400), a.y_max.value_or(400), opts));
    if (all || a.suite == "partition")
        reports.push_back(verify_partition(a.x_max.value_or(400), a.y_max.value_or(400), a.s_max.value_or(32), opts));
    if (all || a.suite == "moves")
        reports.push_back(verify_move_lemmas(a.x_max.value_or(128), a.y_max.value_or(128), opts));
    if (all || a.suite == "correspondence") reports.push_back(verify_correspondence(a.x_max.value_or(4096), opts));
    if (all || a.suite == "josephus") reports.push_back(verify_josephus_forms(a.v_max.value_or(4096), opts));
    if (all || a.suite == "inclusions") reports.push_back(verify_lemma_inclusions(a.s_max.value_or(12), opts));

    bool passed = true;
    std::string text;
    json report = json::array();
    for (const VerificationReport& r : reports) {
        passed = passed && r.passed;
        text += to_text(r);
        report.push_back(to_json(r));
    }
    json inputs{{"suite", a.suite}};
    if (a.x_max) inputs["xmax"] = *a.x_max;
    if (a.y_max) inputs["ymax"] = *a.y_max;
    if (a.v_max) inputs["vmax"] = *a.v_max;
    if (a.s_max) inputs["smax"] = *a.s_max;
    o.emit("verify", inputs, {{"passed", passed}}, text, report);
    return passed ? ok : verification_failed;
}

}  // namespace

void write_grundy_csv(std::ostream& out, const GrundyTable& table) {
    out << "x,y,grundy,family,s,param1,param2\n";
    for (std::uint64_t x = 0; x <= table.x_max(); ++x) {
        for (std::uint64_t y = 0; y <= table.y_max(); ++y) {
            const GrundyClass c = classify({x, y});
            const auto [a, b] = c.params();
            out << x << ',' << y << ',' << table.at({x, y}) << ',' << c.tag() << ',' << c.s() << ',' << a << ','
                << b << '\n';
        }
    }
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted two-pile Nim (+1 / -2 stones): Grundy values, closed-form classes, Josephus "
                 "elimination and exhaustive verification"};
    app.name("josnim");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Structured JSON output");

    std::uint64_t x = 0;
    std::uint64_t y = 0;
    auto add_xy = [&](CLI::App* sub) {
        sub->add_option("x", x, "Stones of weight +1")->required();
        sub->add_option("y", y, "Stones of weight -2")->required();
    };

    auto* grundy_cmd = app.add_subcommand("grundy", "Grundy value by brute force (oracle) and closed form");
    add_xy(grundy_cmd);
    bool no_oracle = false;
    grundy_cmd->add_flag("--no-oracle", no_oracle, "Skip the brute-force value");

    auto* classify_cmd = app.add_subcommand("classify", "Closed-form class of a position");
    add_xy(classify_cmd);

    auto* moves_cmd = app.add_subcommand("moves", "Legal moves from a position");
    add_xy(moves_cmd);

    auto* best_cmd = app.add_subcommand("best-move", "Engine move from a position");
    add_xy(best_cmd);

    auto* sets_cmd = app.add_subcommand("sets", "Positions with Grundy value s inside a box");
    std::uint64_t s = 0;
    std::uint64_t box_x = 16;
    std::uint64_t box_y = 16;
    sets_cmd->add_option("s", s, "Grundy value")->required();
    sets_cmd->add_option("--xmax", box_x, "Largest x")->capture_default_str();
    sets_cmd->add_option("--ymax", box_y, "Largest y")->capture_default_str();

    auto* josephus_cmd = app.add_subcommand("josephus", "Elimination order of 1..v, removing every second number");
    std::uint64_t v = 1;
    josephus_cmd->add_option("v", v, "Circle size")->required();

    auto* fs_cmd = app.add_subcommand("fs", "F_s(v), the s-th number from the end of the elimination order");
    fs_cmd->add_option("s", s, "Index from the end")->required();
    fs_cmd->add_option("v", v, "Circle size")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification sweeps");
    VerifyArgs va;
    verify_cmd->add_option("--suite", va.suite, "Suite to run")->check(CLI::IsMember(suites))->capture_default_str();
    verify_cmd->add_option("--xmax", va.x_max, "Largest x");
    verify_cmd->add_option("--ymax", va.y_max, "Largest y");
    verify_cmd->add_option("--vmax", va.v_max, "Largest circle size");
    verify_cmd->add_option("--smax", va.s_max, "Largest Grundy value");
    verify_cmd->add_option("--threads", va.threads, "Worker threads (0: hardware concurrency)");

    auto* export_cmd = app.add_subcommand("export", "Write the Grundy table of a box as CSV or JSON");
    std::string export_path;
    std::string export_format = "csv";
    export_cmd->add_option("--xmax", box_x, "Largest x")->capture_default_str();
    export_cmd->add_option("--ymax", box_y, "Largest y")->capture_default_str();
    export_cmd->add_option("--out", export_path, "Output file (default: stdout)");
    export_cmd->add_option("--format", export_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* play_cmd = app.add_subcommand("play", "Play against the engine");
    SessionConfig session;
    bool engine_first = false;
    std::string transcript_path;
    play_cmd->add_option("--x", session.start.x, "Starting stones of weight +1")->capture_default_str();
    play_cmd->add_option("--y", session.start.y, "Starting stones of weight -2")->capture_default_str();
    play_cmd->add_flag("--engine-first", engine_first, "Engine makes the first move");
    play_cmd->add_flag("--hint", session.hints, "Show Grundy value and winning moves each turn");
    play_cmd->add_option("--transcript", transcript_path, "Write the session transcript (JSON) to this file");

    auto* selfplay_cmd = app.add_subcommand("selfplay", "Engine versus a seeded random adversary");
    std::uint64_t games = 1000;
    std::uint64_t bound = 64;
    std::uint64_t seed = 0;
    selfplay_cmd->add_option("--games", games, "Number of games")->capture_default_str();
    selfplay_cmd->add_option("--max", bound, "Largest starting x and y")->capture_default_str();
    selfplay_cmd->add_option("--seed", seed, "Adversary seed")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    const Output o{out, as_json};
    try {
        if (grundy_cmd->parsed()) {
            const Position p{x, y};
            const GrundyValue closed = grundy_closed(p);
            json results{{"closed", closed}};
            std::string text;
            int code = ok;
            if (no_oracle) {
                text = "closed=" + std::to_string(closed) + "\n";
            } else {
                const GrundyValue oracle = grundy(p);
                results["oracle"] = oracle;
                results["agree"] = oracle == closed;
                text = "oracle=" + std::to_string(oracle) + " closed=" + std::to_string(closed) + "\n";
                if (oracle != closed) code = verification_failed;
            }
            o.emit("grundy", position_json(p), results, text);
            return code;
        }
        if (classify_cmd->parsed()) {
            const Position p{x, y};
            const GrundyClass c = classify(p);
            o.emit("classify", position_json(p), class_json(c), to_string(c) + "\n");
            return ok;
        }
        if (moves_cmd->parsed()) {
            const Position p{x, y};
            std::ostringstream text;
            text << describe(p) << " bound=" << removal_bound(p) << "\n";
            json list = json::array();
            for (const MoveAction& m : legal_moves(p)) {
                text << to_string(m) << " -> " << describe(apply_move(p, m)) << "\n";
                list.push_back(to_string(m));
            }
            o.emit("moves", position_json(p),
                   {{"weight", total_weight(p)}, {"bound", removal_bound(p)}, {"moves", list}}, text.str());
            return ok;
        }
        if (best_cmd->parsed()) {
            const Position p{x, y};
            GrundyCache cache;
            const MoveAction m = best_move(p, cache);
            const bool winning = cache(apply_move(p, m)) == 0;
            o.emit("best-move", position_json(p), {{"move", to_string(m)}, {"winning", winning}},
                   to_string(m) + (winning ? " (winning)\n" : " (no winning move)\n"));
            return ok;
        }
        if (sets_cmd->parsed()) {
            std::string text;
            json list = json::array();
            for (const GrundyClass& c : enumerate_class_members(s, box_x, box_y)) {
                const Position p = class_position(c);
                text += to_string(p) + " " + to_string(c) + "\n";
                json entry = class_json(c);
                entry["x"] = p.x;
                entry["y"] = p.y;
                list.push_back(entry);
            }
            o.emit("sets", {{"s", s}, {"xmax", box_x}, {"ymax", box_y}}, {{"positions", list}}, text);
            return ok;
        }
        if (josephus_cmd->parsed()) {
            const EliminationOrder order = elimination_order(v);
            std::string text;
            for (std::uint64_t e : order.sequence()) text += (text.empty() ? "" : " ") + std::to_string(e);
            o.emit("josephus", {{"v", v}}, {{"order", order.sequence()}}, text + "\n");
            return ok;
        }
        if (fs_cmd->parsed()) {
            const FsQuery q{s, v};
            const std::uint64_t sim = f_s_simulated(q);
            const std::uint64_t closed = f_s_closed(q);
            const std::uint64_t rec = f_s_recursive(q);
            const bool agree = sim == closed && sim == rec;
            o.emit("fs", {{"s", s}, {"v", v}},
                   {{"simulated", sim}, {"closed", closed}, {"recursive", rec}, {"agree", agree}},
                   "simulated=" + std::to_string(sim) + " closed=" + std::to_string(closed) +
                       " recursive=" + std::to_string(rec) + "\n");
            return agree ? ok : verification_failed;
        }
        if (verify_cmd->parsed()) return run_verify(va, o);
        if (export_cmd->parsed()) {
            if (as_json) export_format = "json";
            const GrundyTable table(box_x, box_y);
            std::ofstream file;
            if (!export_path.empty()) {
                file.open(export_path);
                if (!file) {
                    err << "cannot open " << export_path << " for writing\n";
                    return usage_error;
                }
            }
            std::ostream& sink = export_path.empty() ? out : file;
            if (export_format == "csv") {
                write_grundy_csv(sink, table);
            } else {
                json rows = json::array();
                for (std::uint64_t i = 0; i <= box_x; ++i)
                    for (std::uint64_t j = 0; j <= box_y; ++j) {
                        json row = class_json(classify({i, j}));
                        row["x"] = i;
                        row["y"] = j;
                        row["grundy"] = table.at({i, j});
                        rows.push_back(row);
                    }
                sink << json{{"command", "export"},
                             {"inputs", {{"xmax", box_x}, {"ymax", box_y}}},
                             {"results", rows},
                             {"report", nullptr}}
                            .dump(1)
                     << "\n";
            }
            if (!export_path.empty())
                out << "wrote " << table.size() << " rows to " << export_path << "\n";
            return ok;
        }
        if (play_cmd->parsed()) {
            session.human_first = !engine_first;
            const SessionTranscript t = play_session(session, in, out);
            if (!transcript_path.empty()) {
                std::ofstream file(transcript_path);
                if (!file) {
                    err << "cannot open " << transcript_path << " for writing\n";
                    return usage_error;
                }
                file << to_json(t).dump(2) << "\n";
            }
            return ok;
        }
        if (selfplay_cmd->parsed()) {
            const SelfPlaySummary summary = self_play(games, bound, seed);
            json results{{"games", summary.games}, {"engine_wins", summary.engine_wins}};
            std::string text = "engine won " + std::to_string(summary.engine_wins) + "/" +
                               std::to_string(summary.games) + "\n";
            if (summary.first_loss) {
                results["first_loss"] = position_json(*summary.first_loss);
                text += "first loss from " + to_string(*summary.first_loss) + "\n";
            }
            o.emit("selfplay", {{"games", games}, {"max", bound}, {"seed", seed}}, results, text);
            return summary.engine_wins == summary.games ? ok : verification_failed;
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const NoMove& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const IllegalMove& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    err << app.help();
    return usage_error;
}

}  // namespace josnim::cli
