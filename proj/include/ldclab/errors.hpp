// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace ldclab {

/// Error taxonomy shared by the whole library. The CLI maps these to
/// nonzero exit codes and human-readable messages.
enum class Errc {
    MissingMessage,
    BadSymbol,
    LengthMismatch,
    NotInjective,
    EmptyPairSet,
    RadiusTooLarge,
    CoordOutOfRange,
    QueryTooLong,
    WeightsNotNormalized,
    PartialTable,
    TargetOutOfRange,
    DeltaOutOfRange,
    ViewLengthMismatch,
    NotACodeword,
    NotCanonical,
    NotNonsmoothable,
    BadT,
    EntryExplosion,
    HasBotOutputs,
    SoundnessTooLarge,
    BadParameters,
    BallTooLarge,
    UnknownFixture,
    FixtureOracleFailure,
    IoFailure,
    BadSpec,
    UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ldclab
