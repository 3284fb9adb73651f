#pragma once

#include <string>

#include "polarfit/fourier.hpp"

namespace polarfit {

struct RenderSpec {
    int resolution = 720;   // curve sample count, >= 16
    int width = 800;        // px, >= 64
    int height = 800;       // px, >= 64
    double margin = 0.05;   // viewport fraction, [0, 0.5)
    bool show_input = false;
};

/// Serializes a model as {"c":..,"terms":[{"k":..,"a":..,"b":..},..]}.
/// Numbers carry 17 significant digits so parsing the output recovers the
/// model bit for bit.
std::string model_to_json(const FourierModel& m);

/// Parses and validates the model schema. Throws Error(SchemaError) for
/// malformed JSON, wrong types, or missing/extra keys, and
/// Error(InvariantError) for non-positive, duplicate, or unsorted
/// harmonics.
FourierModel model_from_json(const std::string& text);

std::string report_to_json(const FitReport& report);

/// Renders the curve as a standalone SVG 1.1 document: one closed path,
/// plus one circle per overlay sample when show_input is set. The theta=0
/// ray points up so models with b == 0 draw mirror-symmetric about the
/// vertical centerline; negative radii reflect through the origin.
/// Byte-deterministic for identical inputs.
std::string render_curve(const FourierModel& m, const RenderSpec& spec,
                         const PolarSamples* overlay = nullptr);

}  // namespace polarfit
