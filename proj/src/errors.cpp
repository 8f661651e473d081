// Copyright 2026 the ldclab authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "ldclab/errors.hpp"

namespace ldclab {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MissingMessage: return "MissingMessage";
        case Errc::BadSymbol: return "BadSymbol";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::NotInjective: return "NotInjective";
        case Errc::EmptyPairSet: return "EmptyPairSet";
        case Errc::RadiusTooLarge: return "RadiusTooLarge";
        case Errc::CoordOutOfRange: return "CoordOutOfRange";
        case Errc::QueryTooLong: return "QueryTooLong";
        case Errc::WeightsNotNormalized: return "WeightsNotNormalized";
        case Errc::PartialTable: return "PartialTable";
        case Errc::TargetOutOfRange: return "TargetOutOfRange";
        case Errc::DeltaOutOfRange: return "DeltaOutOfRange";
        case Errc::ViewLengthMismatch: return "ViewLengthMismatch";
        case Errc::NotACodeword: return "NotACodeword";
        case Errc::NotCanonical: return "NotCanonical";
        case Errc::NotNonsmoothable: return "NotNonsmoothable";
        case Errc::BadT: return "BadT";
        case Errc::EntryExplosion: return "EntryExplosion";
        case Errc::HasBotOutputs: return "HasBotOutputs";
        case Errc::SoundnessTooLarge: return "SoundnessTooLarge";
        case Errc::BadParameters: return "BadParameters";
        case Errc::BallTooLarge: return "BallTooLarge";
        case Errc::UnknownFixture: return "UnknownFixture";
        case Errc::FixtureOracleFailure: return "FixtureOracleFailure";
        case Errc::IoFailure: return "IoFailure";
        case Errc::BadSpec: return "BadSpec";
        case Errc::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace ldclab
