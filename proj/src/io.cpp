// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/io.hpp"

#include <cstdio>
#include <fstream>

namespace ldclab {

namespace {

constexpr std::int64_t kJsonIntMax = (1LL << 53);

void reject_unknown(const Json& obj, const std::vector<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            fail(Errc::BadSpec, "unknown field '" + key + "' in " + where);
    }
}

const Json& need(const Json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(Errc::BadSpec, where + " is missing field '" + key + "'");
    return *it;
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Int(j.get<std::string>());
    fail(Errc::BadSpec, "expected an integer (number or decimal string)");
}

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) {
        long l = v.get_si();
        if (l < kJsonIntMax && l > -kJsonIntMax) return Json(l);
    }
    return Json(v.get_str());
}

std::vector<int> coords_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(Errc::BadSpec, where + " must be an array of coordinates");
    std::vector<int> out;
    for (const Json& c : j) {
        if (!c.is_number_integer()) fail(Errc::BadSpec, where + " must contain integers");
        out.push_back(c.get<int>());
    }
    return out;
}

}  // namespace

Json rat_to_json(const Rat& value) { return Json::array({int_to_json(value.get_num()), int_to_json(value.get_den())}); }

Rat rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) fail(Errc::BadSpec, "rational must be a [num, den] pair");
    Int num = int_from_json(j[0]);
    Int den = int_from_json(j[1]);
    if (den == 0) fail(Errc::BadSpec, "rational has zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Json code_to_json(const Code& code) {
    Json sigma = Json::array();
    for (int s = 0; s < code.sigma(); ++s) sigma.push_back(std::string(1, code.alphabet().token(static_cast<Sym>(s))));
    Json codebook = Json::object();
    for (long m = 0; m < code.num_messages(); ++m)
        codebook[code.message_string(m)] = code.render_word(code.codeword(m));
    return Json{{"sigma", sigma}, {"k", code.k()}, {"n", code.n()}, {"codebook", codebook}};
}

Code code_from_json(const Json& j) {
    if (!j.is_object()) fail(Errc::BadSpec, "code spec must be a JSON object");
    reject_unknown(j, {"sigma", "k", "n", "codebook"}, "code spec");
    CodeSpec spec;
    for (const Json& tok : need(j, "sigma", "code spec")) {
        if (!tok.is_string()) fail(Errc::BadSpec, "sigma must be an array of 1-char strings");
        spec.sigma.push_back(tok.get<std::string>());
    }
    spec.k = need(j, "k", "code spec").get<long>();
    spec.n = need(j, "n", "code spec").get<long>();
    const Json& book = need(j, "codebook", "code spec");
    if (!book.is_object()) fail(Errc::BadSpec, "codebook must be an object");
    for (const auto& [msg, cw] : book.items()) {
        if (!cw.is_string()) fail(Errc::BadSpec, "codeword for '" + msg + "' must be a string");
        spec.codebook[msg] = cw.get<std::string>();
    }
    return Code::validate(spec);
}

Json decoder_to_json(const Decoder& dec) {
    Json rules = Json::object();
    for (int t = 1; t <= dec.num_targets(); ++t) {
        Json entries = Json::array();
        for (const RuleEntry& e : dec.rules_for(Target{dec.family(), t})) {
            Json table = Json::object();
            for (size_t r = 0; r < e.table.size(); ++r) {
                std::string key =
                    dec.alphabet().render(view_at_rank(static_cast<long>(r), static_cast<int>(e.query.size()), dec.sigma()));
                table[key] = e.table[r].is_bot() ? std::string("bot")
                                                 : std::string(1, dec.alphabet().token(e.table[r].symbol()));
            }
            entries.push_back(Json{{"weight", rat_to_json(e.weight)}, {"query", e.query}, {"table", table}});
        }
        rules[std::to_string(t)] = entries;
    }
    return Json{{"q", dec.q()}, {"target_kind", target_family_name(dec.family())}, {"rules", rules}};
}

Decoder decoder_from_json(const Json& j, const Code& code) {
    if (!j.is_object()) fail(Errc::BadSpec, "decoder spec must be a JSON object");
    reject_unknown(j, {"q", "target_kind", "rules"}, "decoder spec");
    DecoderSpec spec;
    spec.q = need(j, "q", "decoder spec").get<long>();
    spec.target_kind = need(j, "target_kind", "decoder spec").get<std::string>();
    const Json& rules = need(j, "rules", "decoder spec");
    if (!rules.is_object()) fail(Errc::BadSpec, "rules must be an object keyed by target index");
    for (const auto& [key, entries] : rules.items()) {
        long target = 0;
        try {
            target = std::stol(key);
        } catch (...) {
            fail(Errc::BadSpec, "rule key '" + key + "' is not a target index");
        }
        if (!entries.is_array()) fail(Errc::BadSpec, "rules for target " + key + " must be an array");
        std::vector<DecoderSpec::RawEntry> group;
        for (const Json& e : entries) {
            reject_unknown(e, {"weight", "query", "table"}, "decoder entry");
            DecoderSpec::RawEntry raw;
            raw.weight = rat_from_json(need(e, "weight", "decoder entry"));
            raw.query = coords_from_json(need(e, "query", "decoder entry"), "query");
            const Json& table = need(e, "table", "decoder entry");
            if (!table.is_object()) fail(Errc::BadSpec, "table must be an object");
            for (const auto& [view, out] : table.items()) {
                if (!out.is_string()) fail(Errc::BadSpec, "table output must be a string");
                raw.table[view] = out.get<std::string>();
            }
            group.push_back(std::move(raw));
        }
        spec.rules[target] = std::move(group);
    }
    return validate_decoder(spec, code);
}

Json derived_to_json(const DerivedDecoder& dec) {
    Json rules = Json::object();
    for (int t = 1; t <= dec.num_targets(); ++t) {
        Json entries = Json::array();
        for (const DerivedRule& r : dec.rules_for(Target{dec.family(), t})) {
            Json pattern = Json::object();
            for (size_t v = 0; v < r.pattern_map.size(); ++v) {
                std::string key =
                    dec.alphabet().render(view_at_rank(static_cast<long>(v), static_cast<int>(r.light.size()), dec.sigma()));
                pattern[key] = r.pattern_map[v].is_good()
                                   ? std::string(1, dec.alphabet().token(r.pattern_map[v].symbol))
                                   : std::string("uniform");
            }
            entries.push_back(Json{{"weight", rat_to_json(r.weight)},
                                   {"query", r.query},
                                   {"light", r.light},
                                   {"pattern_map", pattern}});
        }
        rules[std::to_string(t)] = entries;
    }
    return Json{{"q_effective", dec.q_effective()},
                {"t", dec.repetitions()},
                {"tie", tie_policy_name(dec.tie())},
                {"target_kind", target_family_name(dec.family())},
                {"rules", rules}};
}

DerivedDecoder derived_from_json(const Json& j, const Code& code) {
    if (!j.is_object()) fail(Errc::BadSpec, "derived decoder spec must be a JSON object");
    reject_unknown(j, {"q_effective", "t", "tie", "target_kind", "rules"}, "derived decoder spec");
    const std::string kind = need(j, "target_kind", "derived spec").get<std::string>();
    TargetFamily family;
    if (kind == "message")
        family = TargetFamily::Message;
    else if (kind == "codeword")
        family = TargetFamily::Codeword;
    else
        fail(Errc::BadSpec, "target_kind must be \"message\" or \"codeword\"");
    const int t = need(j, "t", "derived spec").get<int>();
    const std::string tie_name = need(j, "tie", "derived spec").get<std::string>();
    TiePolicy tie;
    if (tie_name == "uniform")
        tie = TiePolicy::Uniform;
    else if (tie_name == "lex")
        tie = TiePolicy::Lex;
    else
        fail(Errc::BadSpec, "tie must be \"uniform\" or \"lex\"");

    const int num_targets = family == TargetFamily::Message ? code.k() : code.n();
    std::vector<std::vector<DerivedRule>> rules(static_cast<size_t>(num_targets));
    const Json& raw_rules = need(j, "rules", "derived spec");
    int q_effective = 0;
    for (const auto& [key, entries] : raw_rules.items()) {
        long target = 0;
        try {
            target = std::stol(key);
        } catch (...) {
            fail(Errc::BadSpec, "rule key '" + key + "' is not a target index");
        }
        if (target < 1 || target > num_targets) fail(Errc::TargetOutOfRange, "target " + key + " outside range");
        std::vector<DerivedRule> group;
        for (const Json& e : entries) {
            reject_unknown(e, {"weight", "query", "light", "pattern_map"}, "derived entry");
            DerivedRule rule;
            rule.weight = rat_from_json(need(e, "weight", "derived entry"));
            if (rule.weight <= 0) fail(Errc::BadSpec, "rule weight must be positive");
            rule.query = coords_from_json(need(e, "query", "derived entry"), "query");
            rule.light = coords_from_json(need(e, "light", "derived entry"), "light");
            for (int c : rule.light)
                if (std::find(rule.query.begin(), rule.query.end(), c) == rule.query.end())
                    fail(Errc::BadSpec, "light coordinate " + std::to_string(c) + " not in query");
            for (int c : rule.query)
                if (c < 1 || c > code.n()) fail(Errc::CoordOutOfRange, "coordinate outside [n]");
            long views = 1;
            for (size_t i = 0; i < rule.light.size(); ++i) views *= code.sigma();
            const Json& pattern = need(e, "pattern_map", "derived entry");
            if (static_cast<long>(pattern.size()) != views)
                fail(Errc::PartialTable, "pattern_map has " + std::to_string(pattern.size()) + " views, expected " +
                                             std::to_string(views));
            rule.pattern_map.reserve(static_cast<size_t>(views));
            for (long v = 0; v < views; ++v) {
                std::string key2 =
                    code.alphabet().render(view_at_rank(v, static_cast<int>(rule.light.size()), code.sigma()));
                auto it = pattern.find(key2);
                if (it == pattern.end()) fail(Errc::PartialTable, "pattern_map missing view '" + key2 + "'");
                const std::string out = it->get<std::string>();
                if (out == "uniform") {
                    rule.pattern_map.push_back(PatternClass::bad(PatternTag::BadUnspecified));
                } else {
                    if (out.size() != 1) fail(Errc::BadSymbol, "pattern output '" + out + "' invalid");
                    auto idx = code.alphabet().index_of(out[0]);
                    if (!idx) fail(Errc::BadSymbol, "pattern output '" + out + "' not in alphabet");
                    rule.pattern_map.push_back(PatternClass::good(*idx));
                }
            }
            q_effective = std::max(q_effective, static_cast<int>(rule.light.size()));
            group.push_back(std::move(rule));
        }
        rules[static_cast<size_t>(target - 1)] = std::move(group);
    }
    for (int i = 0; i < num_targets; ++i)
        if (rules[static_cast<size_t>(i)].empty()) fail(Errc::BadSpec, "no rules for target " + std::to_string(i + 1));
    const int file_qe = need(j, "q_effective", "derived spec").get<int>();
    if (file_qe != q_effective) fail(Errc::BadSpec, "q_effective does not match the rules");
    return DerivedDecoder::assemble(q_effective, code.n(), code.alphabet(), family, std::move(rules), t, tie);
}

AnyDecoder any_decoder_from_json(const Json& j, const Code& code) {
    if (j.is_object() && j.contains("rules")) {
        for (const auto& [_, entries] : j["rules"].items()) {
            if (entries.is_array() && !entries.empty() && entries[0].contains("pattern_map"))
                return derived_from_json(j, code);
            break;
        }
    }
    return decoder_from_json(j, code);
}

Json report_to_json(const VerificationReport& report) {
    Json exactness = Json::object();
    exactness["kind"] = measurement_kind_name(report.exactness.kind);
    if (report.exactness.kind != MeasurementKind::Exact) {
        exactness["seed"] = report.exactness.seed;
        exactness["restarts"] = report.exactness.restarts;
    }
    if (report.exactness.kind == MeasurementKind::MonteCarlo) exactness["samples"] = report.exactness.samples;
    Json j{{"mode", report.mode},
           {"radius", report.radius},
           {"exactness", exactness},
           {"completeness", rat_to_json(report.completeness)},
           {"soundness", rat_to_json(report.soundness)},
           {"lower_bound_only", report.lower_bound_only},
           {"evals", report.evals}};
    j["delta"] = report.delta ? rat_to_json(*report.delta) : Json(nullptr);
    if (report.witness) {
        j["witness"] = Json{{"message", report.witness->message},
                            {"target", report.witness->target_index},
                            {"word", report.witness->word}};
    } else {
        j["witness"] = Json(nullptr);
    }
    return j;
}

std::string report_csv_header() { return "radius,c*,s*_num,s*_den,bound,pass\n"; }

std::string report_csv_row(const VerificationReport& report, const std::optional<Rat>& claimed_bound) {
    std::string row = std::to_string(report.radius) + "," + rat_to_string(report.completeness) + "," +
                      report.soundness.get_num().get_str() + "," + report.soundness.get_den().get_str() + ",";
    if (claimed_bound) {
        row += rat_to_string(*claimed_bound);
        row += report.soundness <= *claimed_bound ? ",1" : ",0";
    } else {
        row += ",";
    }
    return row + "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoFailure, "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        fail(Errc::BadSpec, "JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(Errc::IoFailure, "cannot write '" + tmp + "'");
        out << content;
        if (!out) fail(Errc::IoFailure, "short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        fail(Errc::IoFailure, "cannot rename '" + tmp + "' to '" + path + "'");
    }
}

Code load_code_file(const std::string& path) { return code_from_json(load_json_file(path)); }

AnyDecoder load_decoder_file(const std::string& path, const Code& code) {
    return any_decoder_from_json(load_json_file(path), code);
}

}  // namespace ldclab
