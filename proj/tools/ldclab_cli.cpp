// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)
//
// Command-line front end: verify / derive / tq / amplify / canonicalize /
// classify / bounds / fixtures. Exit codes: 0 success, 1 a measured
// parameter exceeded a claimed one (verification failure), 2 usage or
// input errors.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ldclab/bounds.hpp"
#include "ldclab/fixtures.hpp"
#include "ldclab/io.hpp"

namespace {

using namespace ldclab;

struct CommonInputs {
    std::string fixture;
    std::string code_path;
    std::string decoder_path;
};

void add_input_flags(CLI::App* cmd, CommonInputs* in) {
    cmd->add_option("--fixture", in->fixture, "built-in fixture name");
    cmd->add_option("--code", in->code_path, "code spec file (or fixture name)");
    cmd->add_option("--decoder", in->decoder_path, "decoder spec file (or fixture name)");
}

Code resolve_code(const CommonInputs& in) {
    if (!in.fixture.empty()) return load_fixture(in.fixture).code;
    if (in.code_path.empty()) fail(Errc::UsageError, "need --fixture or --code");
    if (!std::filesystem::exists(in.code_path)) {
        const auto names = fixture_names();
        if (std::find(names.begin(), names.end(), in.code_path) != names.end())
            return load_fixture(in.code_path).code;
    }
    return load_code_file(in.code_path);
}

AnyDecoder resolve_decoder(const CommonInputs& in, const Code& code) {
    if (!in.decoder_path.empty()) {
        if (!std::filesystem::exists(in.decoder_path)) {
            const auto names = fixture_names();
            if (std::find(names.begin(), names.end(), in.decoder_path) != names.end())
                return load_fixture(in.decoder_path).decoder;
        }
        return load_decoder_file(in.decoder_path, code);
    }
    if (!in.fixture.empty()) return load_fixture(in.fixture).decoder;
    fail(Errc::UsageError, "need --fixture or --decoder");
}

Decoder plain_decoder(const AnyDecoder& any) {
    if (const Decoder* d = std::get_if<Decoder>(&any)) return *d;
    fail(Errc::UsageError, "this subcommand needs a plain decoder spec, not a derived one");
}

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
    try {
        return rat_from_string(text);
    } catch (const Error&) {
        fail(Errc::UsageError, flag + " expects an exact rational like 1/3 (floats are rejected)");
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_text_file(out_path, content);
}

std::vector<Rat> parse_rat_list(const std::string& text, const std::string& flag) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rat_flag(item, flag));
    if (out.empty()) fail(Errc::UsageError, flag + " needs at least one value");
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (...) {
            fail(Errc::UsageError, flag + " expects integers");
        }
    }
    if (out.empty()) fail(Errc::UsageError, flag + " needs at least one value");
    return out;
}

int run_verify(const CommonInputs& in, const std::string& mode, int radius, const std::string& delta_text,
               bool heuristic, bool monte_carlo, std::uint64_t seed, bool seed_given, std::uint64_t samples,
               int restarts, std::uint64_t eval_budget, bool serial, const std::string& claim_text,
               const std::string& out_path, const std::string& format, bool csv_sweep) {
    Code code = resolve_code(in);
    AnyDecoder dec = resolve_decoder(in, code);

    VerifyConfig cfg;
    cfg.kind = monte_carlo ? MeasurementKind::MonteCarlo
                           : (heuristic ? MeasurementKind::Heuristic : MeasurementKind::Exact);
    if (monte_carlo && !seed_given) fail(Errc::UsageError, "--monte-carlo requires --seed");
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.restarts = restarts;
    cfg.eval_budget = eval_budget;
    cfg.backend = serial ? Backend::Serial : Backend::Parallel;

    const TargetFamily family = std::visit([](const auto& d) { return d.family(); }, dec);
    const bool relaxed = mode == "rldc" || mode == "rlcc";
    const bool message_mode = mode == "ldc" || mode == "rldc";
    if (mode != "ldc" && mode != "rldc" && mode != "lcc" && mode != "rlcc")
        fail(Errc::UsageError, "--mode must be ldc|rldc|lcc|rlcc");
    if (message_mode != (family == TargetFamily::Message))
        fail(Errc::UsageError, "mode '" + mode + "' does not match the decoder's target kind");

    if (!delta_text.empty()) {
        Rat delta = parse_rat_flag(delta_text, "--delta");
        if (delta <= 0 || delta > 1) fail(Errc::UsageError, "--delta must be in (0,1]");
        if (radius >= 0) fail(Errc::UsageError, "--radius and --delta are mutually exclusive");
        radius = static_cast<int>(floor_times(delta, code.n()));
        cfg.delta = delta;
    }
    if (radius < 0) fail(Errc::UsageError, "need --radius or --delta");

    std::optional<Rat> claim;
    if (!claim_text.empty()) claim = parse_rat_flag(claim_text, "--claim-s");

    auto measure = [&](int r) {
        return std::visit(
            [&](const auto& d) {
                return relaxed ? measure_rldc_soundness(code, d, r, cfg) : measure_ldc_error(code, d, r, cfg);
            },
            dec);
    };

    std::string content;
    VerificationReport last;
    if (csv_sweep || format == "csv") {
        content += report_csv_header();
        for (int r = csv_sweep ? 0 : radius; r <= radius; ++r) {
            last = measure(r);
            content += report_csv_row(last, claim);
        }
    } else {
        last = measure(radius);
        content = dump_stable(report_to_json(last));
    }
    emit(out_path, content);
    std::cerr << "measured " << last.mode << " " << (relaxed ? "soundness" : "error") << " s* = "
              << rat_to_string(last.soundness) << " (c* = " << rat_to_string(last.completeness) << ", "
              << last.evals << " evaluations, " << last.wall_seconds << "s)\n";
    if (claim && last.soundness > *claim) {
        std::cerr << "verification failure: measured " << rat_to_string(last.soundness) << " exceeds claimed "
                  << rat_to_string(*claim) << "\n";
        return 1;
    }
    return 0;
}

int run_bounds(const std::string& theorem, const std::string& qs, const std::string& sigmas,
               const std::string& ss, const std::string& rs, const std::string& deltas, const std::string& epss,
               const std::string& ts, const std::string& format, const std::string& out_path) {
    const std::vector<int> q_list = parse_int_list(qs, "--q");
    const std::vector<int> sigma_list = parse_int_list(sigmas, "--sigma");
    const std::vector<Rat> s_list = parse_rat_list(ss, "--s");
    const std::vector<Rat> r_list = parse_rat_list(rs, "--r");
    const std::vector<Rat> delta_list = parse_rat_list(deltas, "--delta");
    const std::vector<Rat> eps_list = parse_rat_list(epss, "--eps");
    const std::vector<int> t_list = parse_int_list(ts, "--t");

    const bool csv = format == "csv";
    std::ostringstream out;
    if (theorem == "perfect" || theorem == "imperfect") {
        out << (csv ? "q,sigma,delta,s,r,eps,bound,r_max,admissible\n"
                    : "q sigma delta s r eps -> bound (r_max, admissible)\n");
    } else if (theorem == "tq") {
        out << (csv ? "q,sigma,delta,s,r,t,alpha,eta,rho_lo,rho_hi,rho_t_hi,admissible\n"
                    : "q sigma delta s r t -> alpha eta rho rho^t (admissible)\n");
    } else if (theorem == "amplify") {
        out << (csv ? "s,t,bound_lo,bound_hi\n" : "s t -> (2*sqrt(s(1-s)))^t\n");
    } else if (theorem == "radius-range") {
        out << (csv ? "q,sigma,delta,s,r_max\n" : "q sigma delta s -> r_max\n");
    } else {
        fail(Errc::UsageError, "--theorem must be perfect|imperfect|tq|amplify|radius-range");
    }
    const char sep = csv ? ',' : ' ';
    for (int q : q_list)
        for (int sigma : sigma_list)
            for (const Rat& delta : delta_list)
                for (const Rat& s : s_list) {
                    if (theorem == "radius-range") {
                        Rat r_max = radius_range_perfect(q, sigma, delta, s);
                        out << q << sep << sigma << sep << rat_to_string(delta) << sep << rat_to_string(s) << sep
                            << rat_to_string(r_max) << "\n";
                        continue;
                    }
                    if (theorem == "amplify") continue;
                    for (const Rat& r : r_list) {
                        BoundParams p;
                        p.q = q;
                        p.sigma = sigma;
                        p.delta = delta;
                        p.s = s;
                        p.r = r;
                        if (theorem == "perfect") {
                            BoundResult b = bound_perfect(p);
                            out << q << sep << sigma << sep << rat_to_string(delta) << sep << rat_to_string(s)
                                << sep << rat_to_string(r) << sep << "0" << sep << rat_to_string(b.bound) << sep
                                << rat_to_string(b.r_max) << sep << (b.admissible ? 1 : 0) << "\n";
                        } else if (theorem == "imperfect") {
                            for (const Rat& eps : eps_list) {
                                p.eps = eps;
                                BoundResult b = bound_imperfect(p);
                                out << q << sep << sigma << sep << rat_to_string(delta) << sep << rat_to_string(s)
                                    << sep << rat_to_string(r) << sep << rat_to_string(eps) << sep
                                    << rat_to_string(b.bound) << sep << rat_to_string(b.r_max) << sep
                                    << (b.admissible ? 1 : 0) << "\n";
                            }
                        } else {
                            for (int t : t_list) {
                                p.t = t;
                                TqBound b = bound_tq(p);
                                out << q << sep << sigma << sep << rat_to_string(delta) << sep << rat_to_string(s)
                                    << sep << rat_to_string(r) << sep << t << sep << rat_to_string(b.alpha) << sep
                                    << rat_to_string(b.eta) << sep << rat_to_decimal(b.rho.lo, 6) << sep
                                    << rat_to_decimal(b.rho.hi, 6) << sep << rat_to_decimal(b.rho_t.hi, 6) << sep
                                    << (b.admissible ? 1 : 0) << "\n";
                            }
                        }
                    }
                }
    if (theorem == "amplify")
        for (const Rat& s : s_list)
            for (int t : t_list) {
                RatInterval b = bound_ldc_amplify(s, t);
                out << rat_to_string(s) << sep << t << sep << rat_to_decimal(b.lo, 6) << sep
                    << rat_to_decimal(b.hi, 6) << "\n";
            }
    emit(out_path, out.str());
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"exact analysis of relaxed local decoders"};
    app.require_subcommand(1);

    if (const char* threads = std::getenv("LDCLAB_THREADS")) {
        int count = std::atoi(threads);
        if (count > 0) omp_set_num_threads(count);
    }

    // ---- verify ----
    CommonInputs v_in;
    std::string v_mode = "rldc", v_delta, v_claim, v_out, v_format = "json";
    int v_radius = -1, v_restarts = 8;
    std::uint64_t v_seed = 0, v_samples = 10000, v_budget = 10'000'000;
    bool v_exact = false, v_heur = false, v_mc = false, v_serial = false, v_sweep = false;
    CLI::App* verify = app.add_subcommand("verify", "measure completeness/soundness with witness search");
    add_input_flags(verify, &v_in);
    verify->add_option("--mode", v_mode, "ldc|rldc|lcc|rlcc")->required();
    verify->add_option("--radius", v_radius, "integer corruption radius");
    verify->add_option("--delta", v_delta, "fractional radius num/den, converted via floor(delta*n)");
    auto* vf_exact = verify->add_flag("--exact", v_exact, "exhaustive sweep (default)");
    auto* vf_heur = verify->add_flag("--heuristic", v_heur, "greedy ascent, lower bound only");
    auto* vf_mc = verify->add_flag("--monte-carlo", v_mc, "sampled probabilities, lower bound only");
    vf_exact->excludes(vf_heur)->excludes(vf_mc);
    vf_heur->excludes(vf_mc);
    auto* vf_seed = verify->add_option("--seed", v_seed, "PRNG seed");
    verify->add_option("--samples", v_samples, "monte-carlo sample count");
    verify->add_option("--restarts", v_restarts, "heuristic restarts");
    verify->add_option("--eval-budget", v_budget, "exact-mode evaluation budget");
    verify->add_flag("--serial", v_serial, "use the serial sweep backend");
    verify->add_option("--claim-s", v_claim, "claimed soundness; exit 1 if the measurement exceeds it");
    verify->add_option("--out", v_out, "output file (stdout if omitted)");
    verify->add_option("--format", v_format, "json|csv");
    verify->add_flag("--csv-sweep", v_sweep, "emit a CSV radius sweep 0..radius");

    // ---- derive / tq ----
    CommonInputs d_in;
    std::string d_delta, d_out;
    bool d_allow_noncanonical = false;
    CLI::App* derive = app.add_subcommand("derive", "build the derived LDC decoder");
    add_input_flags(derive, &d_in);
    derive->add_option("--delta", d_delta, "split radius num/den")->required();
    derive->add_option("--out", d_out, "output derived-decoder spec file");
    derive->add_flag("--allow-noncanonical", d_allow_noncanonical,
                     "skip the canonicality check (imperfect-completeness route)");

    CommonInputs t_in;
    std::string t_delta, t_out, t_tie = "uniform";
    int t_reps = 1;
    CLI::App* tq = app.add_subcommand("tq", "build the t-repetition tradeoff decoder");
    add_input_flags(tq, &t_in);
    tq->add_option("--delta", t_delta, "split radius num/den")->required();
    tq->add_option("--t", t_reps, "repetitions")->required();
    tq->add_option("--tie", t_tie, "uniform|lex");
    tq->add_option("--out", t_out, "output derived-decoder spec file");

    // ---- amplify ----
    CommonInputs a_in;
    std::string a_style = "repeat", a_tie = "uniform", a_out;
    int a_reps = 1;
    long a_budget = kDefaultEntryBudget;
    CLI::App* amplify = app.add_subcommand("amplify", "repetition or majority amplification");
    add_input_flags(amplify, &a_in);
    amplify->add_option("--style", a_style, "repeat|majority");
    amplify->add_option("--t", a_reps, "repetitions")->required();
    amplify->add_option("--tie", a_tie, "uniform|lex (majority only)");
    amplify->add_option("--entry-budget", a_budget, "product entry budget");
    amplify->add_option("--out", a_out, "output decoder spec file");

    // ---- canonicalize ----
    CommonInputs c_in;
    std::string c_out;
    CLI::App* canon = app.add_subcommand("canonicalize", "canonical form of a decoder");
    add_input_flags(canon, &c_in);
    canon->add_option("--out", c_out, "output decoder spec file");

    // ---- classify ----
    CommonInputs cl_in;
    std::string cl_delta, cl_message, cl_out;
    int cl_target = 1;
    CLI::App* classify = app.add_subcommand("classify", "pattern map dump for a target/codeword");
    add_input_flags(classify, &cl_in);
    classify->add_option("--delta", cl_delta, "split radius num/den")->required();
    classify->add_option("--target", cl_target, "1-based target index")->required();
    classify->add_option("--message", cl_message, "message whose codeword is classified")->required();
    classify->add_option("--out", cl_out, "output file (stdout if omitted)");

    // ---- bounds ----
    std::string b_theorem, b_q = "2", b_sigma = "2", b_s = "0", b_r = "0", b_delta = "1/2", b_eps = "0",
                b_t = "1", b_format = "text", b_out;
    CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound tables over parameter grids");
    bounds->add_option("--theorem", b_theorem, "perfect|imperfect|tq|amplify|radius-range")->required();
    bounds->add_option("--q", b_q, "query counts, comma separated");
    bounds->add_option("--sigma", b_sigma, "alphabet sizes");
    bounds->add_option("--s", b_s, "soundness values, rationals");
    bounds->add_option("--r", b_r, "LDC radii, rationals");
    bounds->add_option("--delta", b_delta, "RLDC radii, rationals");
    bounds->add_option("--eps", b_eps, "completeness deficits, rationals");
    bounds->add_option("--t", b_t, "repetition counts");
    bounds->add_option("--format", b_format, "text|csv");
    bounds->add_option("--out", b_out, "output file (stdout if omitted)");

    // ---- fixtures ----
    std::string f_dir;
    bool f_verify_all = false;
    CLI::App* fixtures = app.add_subcommand("fixtures", "emit or re-verify the built-in fixtures");
    fixtures->add_option("--dir", f_dir, "directory to emit fixture spec files into");
    fixtures->add_flag("--verify-all", f_verify_all, "re-measure every documented fixture parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    if (verify->parsed())
        return run_verify(v_in, v_mode, v_radius, v_delta, v_heur, v_mc, v_seed, vf_seed->count() > 0, v_samples,
                          v_restarts, v_budget, v_serial, v_claim, v_out, v_format, v_sweep);

    if (derive->parsed()) {
        Code code = resolve_code(d_in);
        Decoder dec = plain_decoder(resolve_decoder(d_in, code));
        DerivedDecoder derived =
            derive_ldc_decoder(code, dec, parse_rat_flag(d_delta, "--delta"), !d_allow_noncanonical);
        emit(d_out, dump_stable(derived_to_json(derived)));
        return 0;
    }
    if (tq->parsed()) {
        Code code = resolve_code(t_in);
        Decoder dec = plain_decoder(resolve_decoder(t_in, code));
        TiePolicy tie = t_tie == "lex" ? TiePolicy::Lex : TiePolicy::Uniform;
        if (t_tie != "lex" && t_tie != "uniform") fail(Errc::UsageError, "--tie must be uniform|lex");
        DerivedDecoder derived = tq_decoder(code, dec, parse_rat_flag(t_delta, "--delta"), t_reps, tie);
        emit(t_out, dump_stable(derived_to_json(derived)));
        return 0;
    }
    if (amplify->parsed()) {
        Code code = resolve_code(a_in);
        Decoder dec = plain_decoder(resolve_decoder(a_in, code));
        Decoder out = [&] {
            if (a_style == "repeat") return amplify_rldc_repeat(dec, a_reps, a_budget);
            if (a_style == "majority") {
                TiePolicy tie = a_tie == "lex" ? TiePolicy::Lex : TiePolicy::Uniform;
                if (a_tie != "lex" && a_tie != "uniform") fail(Errc::UsageError, "--tie must be uniform|lex");
                return amplify_ldc_majority(dec, a_reps, tie, a_budget);
            }
            fail(Errc::UsageError, "--style must be repeat|majority");
        }();
        emit(a_out, dump_stable(decoder_to_json(out)));
        return 0;
    }
    if (canon->parsed()) {
        Code code = resolve_code(c_in);
        Decoder dec = plain_decoder(resolve_decoder(c_in, code));
        CanonicalizeResult res = canonicalize(code, dec);
        emit(c_out, dump_stable(decoder_to_json(res.decoder)));
        std::cerr << res.diagnostics.size() << " ambiguous view(s)\n";
        for (const AmbiguousView& d : res.diagnostics) {
            std::cerr << "  target " << d.target.index << " query [";
            for (size_t i = 0; i < d.query.size(); ++i) std::cerr << (i ? "," : "") << d.query[i];
            std::cerr << "] view " << code.alphabet().render(d.view) << "\n";
        }
        return 0;
    }
    if (classify->parsed()) {
        Code code = resolve_code(cl_in);
        Decoder dec = plain_decoder(resolve_decoder(cl_in, code));
        Rat delta = parse_rat_flag(cl_delta, "--delta");
        Target target{dec.family(), cl_target};
        HeavyLightSplit split = heavy_light_split(dec, target, delta);
        std::vector<Sym> msg = code.alphabet().parse(cl_message);
        if (static_cast<int>(msg.size()) != code.k()) fail(Errc::UsageError, "--message must have length k");
        long rank = 0;
        for (Sym s : msg) rank = rank * code.sigma() + s;
        const Word& cw = code.codeword(rank);
        Json entries = Json::array();
        for (const RuleEntry& entry : dec.rules_for(target)) {
            std::vector<int> light;
            for (int c : entry.query)
                if (!split.is_heavy(c)) light.push_back(c);
            Json pattern = Json::object();
            long views = 1;
            for (size_t i = 0; i < light.size(); ++i) views *= code.sigma();
            for (long r = 0; r < views; ++r) {
                std::vector<Sym> a = view_at_rank(r, static_cast<int>(light.size()), code.sigma());
                PatternClass pc = classify_light_pattern(entry, light, a, code.sigma());
                std::string value;
                switch (pc.tag) {
                    case PatternTag::Good: value = std::string(1, code.alphabet().token(pc.symbol)); break;
                    case PatternTag::BadConflict: value = "bad(conflict)"; break;
                    case PatternTag::BadAllBot: value = "bad(all-bot)"; break;
                    case PatternTag::BadUnspecified: value = "bad"; break;
                }
                pattern[code.alphabet().render(a)] = value;
            }
            PatternClass at_codeword = classify_light_pattern(entry, light, restrict_word(cw, light), code.sigma());
            entries.push_back(Json{{"query", entry.query},
                                   {"light", light},
                                   {"pattern_map", pattern},
                                   {"codeword_view", code.alphabet().render(restrict_word(cw, light))},
                                   {"smoothable_local", at_codeword.is_good()},
                                   {"smoothable_global",
                                    is_smoothable_global(code, target, cw, entry.query, split.light)}});
        }
        Json out{{"target", cl_target},
                 {"message", cl_message},
                 {"delta", rat_to_json(delta)},
                 {"heavy", split.heavy},
                 {"entries", entries}};
        emit(cl_out, dump_stable(out));
        return 0;
    }
    if (bounds->parsed()) return run_bounds(b_theorem, b_q, b_sigma, b_s, b_r, b_delta, b_eps, b_t, b_format, b_out);
    if (fixtures->parsed()) {
        if (!f_dir.empty()) {
            std::filesystem::create_directories(f_dir);
            for (const std::string& name : fixture_names()) {
                FixtureSet f = load_fixture(name);
                write_text_file(f_dir + "/" + name + ".code.json", dump_stable(code_to_json(f.code)));
                write_text_file(f_dir + "/" + name + ".decoder.json", dump_stable(decoder_to_json(f.decoder)));
            }
            std::cerr << "emitted " << fixture_names().size() << " fixtures to " << f_dir << "\n";
        }
        if (f_verify_all) {
            for (const std::string& name : fixture_names()) {
                try {
                    verify_fixture_expectations(load_fixture(name));
                    std::cout << name << ": ok\n";
                } catch (const Error& e) {
                    std::cout << name << ": MISMATCH - " << e.what() << "\n";
                    return 1;
                }
            }
        }
        if (f_dir.empty() && !f_verify_all)
            for (const std::string& name : fixture_names()) std::cout << name << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ldclab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
