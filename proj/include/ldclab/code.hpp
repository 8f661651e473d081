// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldclab/alphabet.hpp"
#include "ldclab/rational.hpp"

namespace ldclab {

/// Length-n sequence of symbol indices. Construction through Code or
/// Alphabet::parse guarantees alphabet membership.
struct Word {
    std::vector<Sym> syms;

    int length() const { return static_cast<int>(syms.size()); }
    Sym at(int coord_1based) const { return syms[static_cast<size_t>(coord_1based) - 1]; }
    auto operator<=>(const Word&) const = default;
};

/// Set of corrupted 1-based coordinates together with the radius it was
/// drawn under.
struct CorruptionSet {
    std::vector<int> coords;  // strictly increasing, subset of [n]
    int radius_bound = 0;
};

/// Raw, unvalidated code description as read from a spec file.
struct CodeSpec {
    std::vector<std::string> sigma;
    long k = 0;
    long n = 0;
    std::map<std::string, std::string> codebook;
};

/// Explicit code: a total injective map from all sigma^k messages to
/// length-n codewords, with the minimum pairwise Hamming distance cached.
/// Messages are indexed by their rank in lexicographic (alphabet) order.
class Code {
  public:
    static Code validate(const CodeSpec& spec);

    const Alphabet& alphabet() const { return alphabet_; }
    int k() const { return k_; }
    int n() const { return n_; }
    int sigma() const { return alphabet_.size(); }

    long num_messages() const { return static_cast<long>(codebook_.size()); }
    const Word& codeword(long message_rank) const { return codebook_[static_cast<size_t>(message_rank)]; }
    /// Message symbols (length k) for a message rank.
    std::vector<Sym> message(long message_rank) const;
    std::string message_string(long message_rank) const;

    /// Rank of the message whose codeword equals `w`, if any.
    std::optional<long> message_of_codeword(const Word& w) const;

    /// Cached minimum distance; nullopt for single-codeword codes.
    std::optional<int> cached_distance() const { return distance_; }

    Word parse_word(const std::string& text) const;
    std::string render_word(const Word& w) const;

  private:
    Alphabet alphabet_;
    int k_ = 0;
    int n_ = 0;
    std::vector<Word> codebook_;
    std::optional<int> distance_;
};

/// |{i : x_i != y_i}|; LengthMismatch on unequal lengths.
int hamming_distance(const Word& x, const Word& y);

/// Minimum pairwise distance, recomputed; EmptyPairSet when the code has
/// fewer than two codewords.
int code_distance(const Code& code);

/// Subsequence of `w` on a strictly increasing 1-based coordinate list.
std::vector<Sym> restrict_word(const Word& w, const std::vector<int>& coords);

/// Number of words within Hamming distance `radius` of a length-n word.
Int ball_size(int n, int sigma, int radius);

/// Visits every word at Hamming distance <= radius from `center` exactly
/// once, in a deterministic order: by distance, then lexicographic
/// coordinate set, then symbol assignment (alphabet order, skipping the
/// center's symbol). The visitor may return false to stop early.
void enumerate_ball(const Word& center, int sigma, int radius,
                    const std::function<bool(const Word&, const CorruptionSet&)>& visit);

/// As enumerate_ball but only the sphere at exact distance `dist`.
void enumerate_sphere(const Word& center, int sigma, int dist,
                      const std::function<bool(const Word&, const CorruptionSet&)>& visit);

}  // namespace ldclab
