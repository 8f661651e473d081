// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ldclab/errors.hpp"

namespace ldclab {

/// Symbol index into an Alphabet.
using Sym = std::uint8_t;

/// Ordered finite alphabet of distinct single-character tokens. The
/// token order is fixed and defines every lexicographic comparison and
/// tie-break in the library.
class Alphabet {
  public:
    Alphabet() = default;

    /// Builds from the ordered token list; rejects duplicates, multi-char
    /// tokens and sizes < 2.
    explicit Alphabet(const std::vector<std::string>& tokens);

    int size() const { return static_cast<int>(tokens_.size()); }
    char token(Sym s) const { return tokens_[s]; }

    std::optional<Sym> index_of(char token) const;

    /// Parses a string of tokens into symbol indices; BadSymbol on
    /// unknown tokens.
    std::vector<Sym> parse(const std::string& text) const;
    std::string render(const std::vector<Sym>& syms) const;

    bool operator==(const Alphabet& o) const { return tokens_ == o.tokens_; }

  private:
    std::vector<char> tokens_;
};

inline Alphabet binary_alphabet() { return Alphabet({"0", "1"}); }

}  // namespace ldclab
