// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "ldclab/verify.hpp"

namespace ldclab {

using Json = nlohmann::json;

/// Rationals travel as [num, den]; components are JSON numbers when they
/// fit in 53 bits and decimal strings otherwise.
Json rat_to_json(const Rat& value);
Rat rat_from_json(const Json& j);

Json code_to_json(const Code& code);
Code code_from_json(const Json& j);

Json decoder_to_json(const Decoder& dec);
Decoder decoder_from_json(const Json& j, const Code& code);

Json derived_to_json(const DerivedDecoder& dec);
DerivedDecoder derived_from_json(const Json& j, const Code& code);

/// A decoder file holds either a plain Decoder (entries with "table") or
/// a DerivedDecoder (entries with "pattern_map").
using AnyDecoder = std::variant<Decoder, DerivedDecoder>;
AnyDecoder any_decoder_from_json(const Json& j, const Code& code);

Json report_to_json(const VerificationReport& report);

/// One CSV line per radius: radius, c*, s*_num, s*_den, bound, pass.
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report, const std::optional<Rat>& claimed_bound);

/// Whole-file helpers. Writing is atomic (temp file + rename) and always
/// byte-stable: sorted keys, two-space indent, trailing newline.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string dump_stable(const Json& j);

Code load_code_file(const std::string& path);
AnyDecoder load_decoder_file(const std::string& path, const Code& code);

}  // namespace ldclab
