#include "penney/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "penney/analysis.hpp"
#include "penney/monte_carlo.hpp"
#include "penney/strategy.hpp"

namespace penney::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    int digits = 6;
    std::string bias = "1/2";
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 42;
    std::size_t horizon = 120;
    std::vector<std::string> patterns;
    std::string which;
};

struct Rendered {
    json payload;
    std::string text;
    std::string csv;
    int exit_code = kSuccess;
};

json integer_json(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) return json(z.get_si());
    return json(z.get_str());
}

json fraction_json(const Rational& r, int digits) {
    return json{{"num", integer_json(r.num())}, {"den", integer_json(r.den())}, {"approx", r.to_decimal(digits)}};
}

std::string fraction_text(const Rational& r, int digits) {
    return r.to_string() + " (" + r.to_decimal(digits) + ")";
}

std::string csv_fraction(const Rational& r, int digits) {
    return r.num().get_str() + "," + r.den().get_str() + "," + r.to_decimal(digits);
}

json json_double(double x) {
    if (!std::isfinite(x)) return nullptr;
    return json(x);
}

std::string fmt_double(double x) {
    if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

Pattern parse_pattern(const std::string& text) { return Pattern::parse(text, length_cap_from_env()); }

CoinSpec parse_coin(const std::string& text) { return CoinSpec(Rational::parse(text)); }

GameSpec parse_game(const Options& o) {
    return GameSpec(parse_pattern(o.patterns.at(0)), parse_pattern(o.patterns.at(1)), parse_coin(o.bias));
}

// ---------------------------------------------------------------------------
// analyze

Rendered cmd_analyze(const Options& o) {
    const GameSpec spec = parse_game(o);
    const GameAnalysis a = full_analysis(spec);
    const int d = o.digits;
    const std::string s1 = spec.s1().to_string();
    const std::string s2 = spec.s2().to_string();
    const auto states = all_patterns(spec.length());

    Rendered r;
    json times = json::array();
    for (const auto& s : states)
        times.push_back({{"state", s.to_string()}, {"time", fraction_json(a.absorption_time(s), d)}});
    r.payload = {{"s1", s1},
                 {"s2", s2},
                 {"length", spec.length()},
                 {"p_heads", fraction_json(spec.coin().p_heads(), d)},
                 {"win_s1", fraction_json(a.win_s1, d)},
                 {"win_s2", fraction_json(a.win_s2, d)},
                 {"absorption_times", times},
                 {"expected_flips", fraction_json(a.expected_flips, d)}};

    std::ostringstream text;
    text << "game: " << s1 << " (first) vs " << s2 << " (second), p_heads = " << spec.coin().p_heads() << "\n";
    text << "Pr(" << s1 << " first) = " << fraction_text(a.win_s1, d) << "\n";
    text << "Pr(" << s2 << " first) = " << fraction_text(a.win_s2, d) << "\n";
    text << "expected flips = " << fraction_text(a.expected_flips, d) << "\n";
    text << "expected steps to absorption by initial window:\n";
    for (const auto& s : states) text << "  " << s.to_string() << "  " << a.absorption_time(s) << "\n";
    r.text = text.str();

    std::ostringstream csv;
    csv << "field,num,den,approx\n";
    csv << "win_s1," << csv_fraction(a.win_s1, d) << "\n";
    csv << "win_s2," << csv_fraction(a.win_s2, d) << "\n";
    csv << "expected_flips," << csv_fraction(a.expected_flips, d) << "\n";
    for (const auto& s : states) csv << "time_" << s.to_string() << "," << csv_fraction(a.absorption_time(s), d) << "\n";
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------------------
// tables

struct PenneyGame {
    Pattern s1;
    Pattern s2;
    GameAnalysis analysis;
};

std::vector<PenneyGame> penney_games() {
    std::vector<PenneyGame> games;
    for (const auto& s : all_patterns(3)) {
        Pattern r = penney_response(s);
        GameAnalysis a = full_analysis(GameSpec(s, r));
        games.push_back({s, std::move(r), std::move(a)});
    }
    return games;
}

std::string pad(const std::string& s, std::size_t width) {
    // Width in code points so mixed-number glyphs line up.
    std::size_t cps = 0;
    for (unsigned char c : s) cps += (c & 0xC0U) != 0x80U;
    return cps >= width ? s : s + std::string(width - cps, ' ');
}

Rendered cmd_tables(const Options& o) {
    const int d = o.digits;
    const auto games = penney_games();
    const auto states = all_patterns(3);
    Rendered r;
    std::ostringstream text, csv;

    if (o.which == "absorption") {
        json columns = json::array();
        for (const auto& s : states) columns.push_back(s.to_string());
        json rows = json::array();
        text << pad("game", 12);
        csv << "s1,s2";
        for (const auto& s : states) {
            text << pad(s.to_string(), 6);
            csv << "," << s.to_string();
        }
        text << "\n";
        csv << "\n";
        for (const auto& g : games) {
            json times = json::array();
            text << pad("(" + g.s1.to_string() + "," + g.s2.to_string() + ")", 12);
            csv << g.s1.to_string() << "," << g.s2.to_string();
            for (const auto& s : states) {
                const Rational& t = g.analysis.absorption_time(s);
                times.push_back(fraction_json(t, d));
                text << pad(t.to_mixed(true), 6);
                csv << "," << t.to_string();
            }
            text << "\n";
            csv << "\n";
            rows.push_back({{"s1", g.s1.to_string()}, {"s2", g.s2.to_string()}, {"times", times}});
        }
        r.payload = {{"table", "absorption"}, {"columns", columns}, {"rows", rows}};
    } else {
        json entries = json::array();
        csv << "s1,s2,num,den,approx\n";
        for (const auto& g : games) {
            const Rational& f = g.analysis.expected_flips;
            entries.push_back({{"s1", g.s1.to_string()}, {"s2", g.s2.to_string()}, {"expected_flips", fraction_json(f, d)}});
            text << pad("(" + g.s1.to_string() + "," + g.s2.to_string() + ")", 12) << pad(f.to_mixed(true), 6) << "  "
                 << f.to_decimal(d) << "\n";
            csv << g.s1.to_string() << "," << g.s2.to_string() << "," << csv_fraction(f, d) << "\n";
        }
        r.payload = {{"table", "game-length"}, {"entries", entries}};
    }
    r.text = text.str();
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------------------
// respond

Rendered cmd_respond(const Options& o) {
    const Pattern s = parse_pattern(o.patterns.at(0));
    if (s.length() != 3) throw InvalidGameError("respond requires a 3-flip pattern, got " + s.to_string());
    const CoinSpec coin = parse_coin(o.bias);
    const int d = o.digits;

    const Pattern penney = penney_response(s);
    const Rational p = beats_probability(s, penney, coin);
    const BestResponse best = best_response(s, coin);

    Rendered r;
    json ties = json::array();
    for (const auto& t : best.tied) ties.push_back(t.to_string());
    r.payload = {{"pattern", s.to_string()},
                 {"p_heads", fraction_json(coin.p_heads(), d)},
                 {"penney_response", penney.to_string()},
                 {"penney_win_probability", fraction_json(p, d)},
                 {"best_response", best.response.to_string()},
                 {"best_win_probability", fraction_json(best.win_probability, d)},
                 {"ties", ties},
                 {"agrees", best.response == penney}};

    std::ostringstream text;
    text << "pattern: " << s.to_string() << "\n";
    text << "penney response: " << penney.to_string() << ", wins with " << fraction_text(p, d) << "\n";
    text << "best response:   " << best.response.to_string() << ", wins with " << fraction_text(best.win_probability, d);
    if (!best.tied.empty()) text << " (tied with " << ties.dump() << ")";
    text << "\n";
    r.text = text.str();

    r.csv = "pattern,response,kind,num,den,approx\n" + s.to_string() + "," + penney.to_string() + ",penney," +
            csv_fraction(p, d) + "\n" + s.to_string() + "," + best.response.to_string() + ",best," +
            csv_fraction(best.win_probability, d) + "\n";
    return r;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteReport {
    json payload;
    std::string text;
    bool passed = true;
};

SuiteReport verify_optimality(const Options& o) {
    SuiteReport rep;
    const int d = o.digits;
    std::ostringstream text;
    json rows = json::array();
    try {
        const ResponseTable table = verify_penney_optimal(CoinSpec::fair());
        for (const auto& e : table.entries) {
            const BestResponse best = best_response(e.pattern, CoinSpec::fair());
            const bool favorable = e.win_probability > Rational(1, 2);
            const bool argmax = best.response == e.response && best.tied.empty();
            rep.passed = rep.passed && favorable && argmax;
            rows.push_back({{"pattern", e.pattern.to_string()},
                            {"response", e.response.to_string()},
                            {"win_probability", fraction_json(e.win_probability, d)},
                            {"favorable", favorable},
                            {"best_response", best.response.to_string()},
                            {"argmax_agrees", argmax}});
            text << "  " << e.pattern.to_string() << " -> " << e.response.to_string() << "  "
                 << pad(e.win_probability.to_string(), 5) << (favorable ? " > 1/2" : " FAILS") << "  argmax "
                 << best.response.to_string() << (argmax ? "" : " DISAGREES") << "\n";
        }
    } catch (const VerificationError& ex) {
        rep.passed = false;
        text << "  " << ex.what() << "\n";
        rep.payload["error"] = ex.what();
    }
    rep.payload["rows"] = rows;
    rep.payload["passed"] = rep.passed;
    rep.text = "optimality: " + std::string(rep.passed ? "PASS" : "FAIL") + "\n" + text.str();
    return rep;
}

SuiteReport verify_nontransitivity(const Options& o) {
    SuiteReport rep;
    const int d = o.digits;
    std::ostringstream text;
    json edges = json::array();
    json nodes = json::array();
    try {
        const BeatsCycle cycle = find_beats_cycle(CoinSpec::fair());
        for (std::size_t i = 0; i < cycle.nodes.size(); ++i) {
            const Pattern& from = cycle.nodes[i];
            const Pattern& to = cycle.nodes[(i + 1) % cycle.nodes.size()];
            const Rational& forward = cycle.edge_probabilities[i];
            const Rational reverse = beats_probability(to, from, CoinSpec::fair());
            const bool ok = forward > Rational(1, 2) && reverse < Rational(1, 2);
            rep.passed = rep.passed && ok;
            nodes.push_back(from.to_string());
            edges.push_back({{"from", from.to_string()},
                             {"to", to.to_string()},
                             {"probability", fraction_json(forward, d)},
                             {"reverse_probability", fraction_json(reverse, d)},
                             {"certified", ok}});
            text << "  " << to.to_string() << " beats " << from.to_string() << " with " << forward
                 << "; reverse " << reverse << (ok ? "" : "  FAIL") << "\n";
        }
    } catch (const VerificationError& ex) {
        rep.passed = false;
        text << "  " << ex.what() << "\n";
        rep.payload["error"] = ex.what();
    }
    std::string chain;
    for (const auto& n : nodes) chain += (chain.empty() ? "" : "->") + n.get<std::string>();
    rep.payload["cycle"] = nodes;
    rep.payload["edges"] = edges;
    rep.payload["passed"] = rep.passed;
    rep.text = "nontransitivity: " + std::string(rep.passed ? "PASS" : "FAIL") + " cycle " + chain + "\n" + text.str();
    return rep;
}

SuiteReport verify_oracle(const Options& o) {
    SuiteReport rep;
    const int d = o.digits;
    const auto patterns = all_patterns(3);
    json pairs = json::array();
    std::size_t contained = 0;
    std::size_t total = 0;
    Rational widest;
    std::ostringstream failures;
    for (const auto& a : patterns) {
        for (const auto& b : patterns) {
            if (a == b) continue;
            const GameSpec spec(a, b);
            const GameAnalysis exact = full_analysis(spec);
            const EnumResult en = enumerate_exact(spec, o.horizon);
            const bool ok = en.win_s1_lower <= exact.win_s1 && exact.win_s1 <= en.win_s1_upper &&
                            en.expected_flips_lower <= exact.expected_flips &&
                            exact.expected_flips <= en.expected_flips_upper;
            ++total;
            if (ok) {
                ++contained;
            } else {
                failures << "  (" << a.to_string() << "," << b.to_string() << ") outside bracket\n";
            }
            widest = std::max({widest, en.win_s1_upper - en.win_s1_lower,
                               en.expected_flips_upper - en.expected_flips_lower});
            pairs.push_back({{"s1", a.to_string()},
                             {"s2", b.to_string()},
                             {"win_s1", fraction_json(exact.win_s1, d)},
                             {"expected_flips", fraction_json(exact.expected_flips, d)},
                             {"contained", ok},
                             {"unresolved_mass", en.unresolved_mass.to_decimal(std::max(d, 20))}});
        }
    }
    rep.passed = contained == total;
    rep.payload = {{"horizon", o.horizon},
                   {"pairs", pairs},
                   {"contained", contained},
                   {"total", total},
                   {"max_width", widest.to_decimal(std::max(d, 20))},
                   {"passed", rep.passed}};
    rep.text = "oracle: " + std::string(rep.passed ? "PASS" : "FAIL") + " " + std::to_string(contained) + "/" +
               std::to_string(total) + " brackets contain the exact values at horizon " + std::to_string(o.horizon) +
               ", max width " + fmt_double(widest.to_double()) + "\n" + failures.str();
    return rep;
}

Rendered cmd_verify(const Options& o) {
    std::vector<std::pair<std::string, SuiteReport>> reports;
    if (o.which == "optimality" || o.which == "all") reports.emplace_back("optimality", verify_optimality(o));
    if (o.which == "nontransitivity" || o.which == "all")
        reports.emplace_back("nontransitivity", verify_nontransitivity(o));
    if (o.which == "oracle" || o.which == "all") reports.emplace_back("oracle", verify_oracle(o));

    Rendered r;
    bool passed = true;
    json suites = json::object();
    std::string csv = "suite,passed\n";
    for (auto& [name, rep] : reports) {
        passed = passed && rep.passed;
        suites[name] = rep.payload;
        r.text += rep.text;
        csv += name + "," + (rep.passed ? "true" : "false") + "\n";
    }
    r.payload = {{"suite", o.which}, {"passed", passed}, {"suites", suites}};
    r.csv = csv;
    r.exit_code = passed ? kSuccess : kVerificationFailed;
    return r;
}

// ---------------------------------------------------------------------------
// simulate

double z_score(double estimate, double exact, double stderr_value) {
    if (stderr_value > 0.0) return (estimate - exact) / stderr_value;
    if (estimate == exact) return 0.0;
    return estimate > exact ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
}

Rendered cmd_simulate(const Options& o) {
    const GameSpec spec = parse_game(o);
    if (o.trials == 0) throw InvalidGameError("--trials must be at least 1");
    const int d = o.digits;
    const SimResult sim = simulate(SimConfig{spec, o.trials, o.seed});
    const GameAnalysis exact = full_analysis(spec);
    const double z_win = z_score(sim.win_rate_s1, exact.win_s1.to_double(), sim.stderr_win_s1);
    const double z_flips = z_score(sim.mean_flips, exact.expected_flips.to_double(), sim.stderr_mean_flips);

    Rendered r;
    r.payload = {{"s1", spec.s1().to_string()},
                 {"s2", spec.s2().to_string()},
                 {"p_heads", fraction_json(spec.coin().p_heads(), d)},
                 {"seed", o.seed},
                 {"generator", "philox4x32-10"},
                 {"simulation",
                  {{"trials", sim.trials},
                   {"wins_s1", sim.wins_s1},
                   {"wins_s2", sim.wins_s2},
                   {"truncated", sim.truncated},
                   {"win_rate_s1", json_double(sim.win_rate_s1)},
                   {"stderr_win_s1", json_double(sim.stderr_win_s1)},
                   {"mean_flips", json_double(sim.mean_flips)},
                   {"stderr_mean_flips", json_double(sim.stderr_mean_flips)}}},
                 {"exact", {{"win_s1", fraction_json(exact.win_s1, d)}, {"expected_flips", fraction_json(exact.expected_flips, d)}}},
                 {"z", {{"win_s1", json_double(z_win)}, {"mean_flips", json_double(z_flips)}}}};

    std::ostringstream text;
    text << "simulated " << sim.trials << " tricks of " << spec.s1().to_string() << " vs " << spec.s2().to_string()
         << " (seed " << o.seed << ", philox4x32-10)\n";
    text << "  wins: " << sim.wins_s1 << " / " << sim.wins_s2 << ", truncated " << sim.truncated << "\n";
    text << "  Pr(" << spec.s1().to_string() << " first): " << fmt_double(sim.win_rate_s1) << " +- "
         << fmt_double(sim.stderr_win_s1) << "  exact " << fraction_text(exact.win_s1, d) << "  z = "
         << fmt_double(z_win) << "\n";
    text << "  mean flips: " << fmt_double(sim.mean_flips) << " +- " << fmt_double(sim.stderr_mean_flips)
         << "  exact " << fraction_text(exact.expected_flips, d) << "  z = " << fmt_double(z_flips) << "\n";
    r.text = text.str();

    std::ostringstream csv;
    csv << "quantity,estimate,stderr,exact_num,exact_den,exact_approx,z\n";
    csv << "win_s1," << fmt_double(sim.win_rate_s1) << "," << fmt_double(sim.stderr_win_s1) << ","
        << csv_fraction(exact.win_s1, d) << "," << fmt_double(z_win) << "\n";
    csv << "mean_flips," << fmt_double(sim.mean_flips) << "," << fmt_double(sim.stderr_mean_flips) << ","
        << csv_fraction(exact.expected_flips, d) << "," << fmt_double(z_flips) << "\n";
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------------------
// overall

Rendered cmd_overall(const Options& o) {
    const Rational overall = overall_expected_length();
    Rendered r;
    r.payload = {{"expected_flips", fraction_json(overall, o.digits)}};
    r.text = "expected flips over the eight Penney games: " + overall.to_string() + " ~ " +
             overall.to_decimal(o.digits) + "\n";
    r.csv = "quantity,num,den,approx\noverall_expected_flips," + csv_fraction(overall, o.digits) + "\n";
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact analysis of Penney's coin-pattern game", "penney"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--digits", o.digits, "Digits in decimal approximations")->check(CLI::Range(0, 60));
    };
    auto add_bias = [&](CLI::App* sub) {
        sub->add_option("--bias", o.bias, "Probability of heads, as a decimal or a fraction");
    };

    auto* analyze = app.add_subcommand("analyze", "Win probabilities and expected lengths for one game");
    analyze->add_option("p1", o.patterns, "First and second player patterns")->expected(2)->required();
    add_common(analyze);
    add_bias(analyze);

    auto* tables = app.add_subcommand("tables", "Regenerate the absorption-time or game-length table");
    tables->add_option("which", o.which)->required()->check(CLI::IsMember({"absorption", "game-length"}));
    add_common(tables);

    auto* respond = app.add_subcommand("respond", "Penney response and exhaustive best response");
    respond->add_option("p1", o.patterns, "First player pattern")->expected(1)->required();
    add_common(respond);
    add_bias(respond);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.which)
        ->required()
        ->check(CLI::IsMember({"optimality", "nontransitivity", "oracle", "all"}));
    verify->add_option("--horizon", o.horizon, "Flip horizon for the exact enumerator")->check(CLI::Range(3, 100000));
    add_common(verify);

    auto* sim = app.add_subcommand("simulate", "Seeded Monte Carlo estimate beside the exact values");
    sim->add_option("p1", o.patterns, "First and second player patterns")->expected(2)->required();
    sim->add_option("--trials", o.trials, "Number of tricks");
    sim->add_option("--seed", o.seed, "Generator seed");
    add_common(sim);
    add_bias(sim);

    auto* overall = app.add_subcommand("overall", "Mean game length over the eight Penney games");
    add_common(overall);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "penney: " << e.what() << "\n";
        return kUsageError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Rendered rendered;
    try {
        if (chosen == analyze) rendered = cmd_analyze(o);
        else if (chosen == tables) rendered = cmd_tables(o);
        else if (chosen == respond) rendered = cmd_respond(o);
        else if (chosen == verify) rendered = cmd_verify(o);
        else if (chosen == sim) rendered = cmd_simulate(o);
        else rendered = cmd_overall(o);
    } catch (const Error& e) {
        err << "penney: " << e.what() << "\n";
        return kUsageError;
    }

    if (o.format == "json") {
        json doc = {{"schema", kSchema},
                    {"command", {{"name", chosen->get_name()}, {"version", kVersion}, {"arguments", args}}},
                    {"payload", rendered.payload}};
        out << doc.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << rendered.csv;
    } else {
        out << rendered.text;
    }
    return rendered.exit_code;
}

}  // namespace penney::cli
