#pragma once

#include <stdexcept>
#include <string>

namespace polarfit {

// Failure categories surfaced by the fitting pipeline. The names are part
// of the CLI contract: diagnostics print them verbatim.
enum class Errc {
    ParseError,
    TooFewPoints,
    NonStarShaped,
    OriginOutside,
    NotUniform,
    OddSampleCount,
    HarmonicTooHigh,
    Underdetermined,
    SymmetryViolated,
    SchemaError,
    InvariantError,
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ParseError: return "ParseError";
        case Errc::TooFewPoints: return "TooFewPoints";
        case Errc::NonStarShaped: return "NonStarShaped";
        case Errc::OriginOutside: return "OriginOutside";
        case Errc::NotUniform: return "NotUniform";
        case Errc::OddSampleCount: return "OddSampleCount";
        case Errc::HarmonicTooHigh: return "HarmonicTooHigh";
        case Errc::Underdetermined: return "Underdetermined";
        case Errc::SymmetryViolated: return "SymmetryViolated";
        case Errc::SchemaError: return "SchemaError";
        case Errc::InvariantError: return "InvariantError";
    }
    return "Error";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

  private:
    Errc code_;
};

}  // namespace polarfit
