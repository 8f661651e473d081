// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/alphabet.hpp"

#include <algorithm>

namespace ldclab {

Alphabet::Alphabet(const std::vector<std::string>& tokens) {
    if (tokens.size() < 2) fail(Errc::BadSpec, "alphabet needs at least 2 symbols");
    if (tokens.size() > 200) fail(Errc::BadSpec, "alphabet too large");
    for (const std::string& t : tokens) {
        if (t.size() != 1) fail(Errc::BadSymbol, "alphabet tokens must be single characters: '" + t + "'");
        if (std::find(tokens_.begin(), tokens_.end(), t[0]) != tokens_.end())
            fail(Errc::BadSpec, "duplicate alphabet token: '" + t + "'");
        tokens_.push_back(t[0]);
    }
}

std::optional<Sym> Alphabet::index_of(char token) const {
    for (std::size_t i = 0; i < tokens_.size(); ++i)
        if (tokens_[i] == token) return static_cast<Sym>(i);
    return std::nullopt;
}

std::vector<Sym> Alphabet::parse(const std::string& text) const {
    std::vector<Sym> out;
    out.reserve(text.size());
    for (char c : text) {
        auto idx = index_of(c);
        if (!idx) fail(Errc::BadSymbol, std::string("symbol '") + c + "' not in alphabet");
        out.push_back(*idx);
    }
    return out;
}

std::string Alphabet::render(const std::vector<Sym>& syms) const {
    std::string out;
    out.reserve(syms.size());
    for (Sym s : syms) out.push_back(token(s));
    return out;
}

}  // namespace ldclab
