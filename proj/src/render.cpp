#include "polarfit/render.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "polarfit/error.hpp"

namespace polarfit {

namespace {

using nlohmann::json;

// 17 significant digits: enough to round-trip any double exactly.
std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_px(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8f", v);
    return buf;
}

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* what) {
    for (const char* key : keys) {
        if (!j.contains(key))
            throw Error(Errc::SchemaError, std::string(what) + " is missing key '" + key + "'");
    }
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : keys) known = known || item.key() == key;
        if (!known)
            throw Error(Errc::SchemaError,
                        std::string(what) + " has unexpected key '" + item.key() + "'");
    }
}

void check_spec(const RenderSpec& spec) {
    if (spec.resolution < 16) throw std::invalid_argument("RenderSpec: resolution must be >= 16");
    if (spec.width < 64 || spec.height < 64)
        throw std::invalid_argument("RenderSpec: width and height must be >= 64");
    if (!(spec.margin >= 0.0 && spec.margin < 0.5))
        throw std::invalid_argument("RenderSpec: margin must be in [0, 0.5)");
}

}  // namespace

std::string model_to_json(const FourierModel& m) {
    std::string out = "{\"c\":" + fmt17(m.c) + ",\"terms\":[";
    bool first = true;
    for (const FourierTerm& t : m.terms) {
        if (!first) out += ',';
        first = false;
        out += "{\"k\":" + std::to_string(t.k) + ",\"a\":" + fmt17(t.a) +
               ",\"b\":" + fmt17(t.b) + '}';
    }
    out += "]}";
    return out;
}

FourierModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::SchemaError, e.what());
    }
    if (!j.is_object()) throw Error(Errc::SchemaError, "model must be a JSON object");
    require_keys(j, {"c", "terms"}, "model");
    if (!j["c"].is_number()) throw Error(Errc::SchemaError, "'c' must be a number");
    if (!j["terms"].is_array()) throw Error(Errc::SchemaError, "'terms' must be an array");

    FourierModel m;
    m.c = j["c"].get<double>();
    int prev_k = 0;
    for (const json& item : j["terms"]) {
        if (!item.is_object()) throw Error(Errc::SchemaError, "term must be an object");
        require_keys(item, {"k", "a", "b"}, "term");
        if (!item["k"].is_number_integer())
            throw Error(Errc::SchemaError, "'k' must be an integer");
        if (!item["a"].is_number() || !item["b"].is_number())
            throw Error(Errc::SchemaError, "'a' and 'b' must be numbers");
        long long k = item["k"].get<long long>();
        if (k < 1 || k > std::numeric_limits<int>::max())
            throw Error(Errc::InvariantError, "harmonic k out of range: " + std::to_string(k));
        if (static_cast<int>(k) <= prev_k)
            throw Error(Errc::InvariantError,
                        "harmonics must be strictly increasing, got k = " + std::to_string(k) +
                            " after " + std::to_string(prev_k));
        prev_k = static_cast<int>(k);
        m.terms.push_back({static_cast<int>(k), item["a"].get<double>(), item["b"].get<double>()});
    }
    return m;
}

std::string report_to_json(const FitReport& report) {
    std::string out = "{\"model\":" + model_to_json(report.model);
    out += ",\"sse\":" + fmt17(report.sse);
    out += ",\"rmse\":" + fmt17(report.rmse);
    out += ",\"selected_harmonics\":[";
    for (std::size_t i = 0; i < report.selected_harmonics.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(report.selected_harmonics[i]);
    }
    out += "],\"parameter_vector\":[";
    for (std::size_t i = 0; i < report.parameter_vector.size(); ++i) {
        if (i) out += ',';
        out += fmt17(report.parameter_vector[i]);
    }
    out += "],\"candidates_evaluated\":" + std::to_string(report.candidates_evaluated);
    out += '}';
    return out;
}

std::string render_curve(const FourierModel& m, const RenderSpec& spec,
                         const PolarSamples* overlay) {
    check_spec(spec);

    // Plot frame: theta = 0 points up and theta grows clockwise on screen,
    // so r(theta) = r(-theta) shows as left/right mirror symmetry. Negative
    // radii fall through the origin to the opposite side on their own.
    auto plot = [](double theta, double r) {
        return std::pair<double, double>{r * std::sin(theta), -r * std::cos(theta)};
    };

    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<std::size_t>(spec.resolution));
    for (int i = 0; i < spec.resolution; ++i) {
        double theta = grid_angle(i, spec.resolution);
        curve.push_back(plot(theta, evaluate(m, theta)));
    }

    const bool draw_overlay = overlay != nullptr && spec.show_input;
    std::vector<std::pair<double, double>> dots;
    if (draw_overlay) {
        dots.reserve(overlay->size());
        for (const PolarSample& s : overlay->samples) dots.push_back(plot(s.theta, s.r));
    }

    double ulo = std::numeric_limits<double>::infinity(), uhi = -ulo;
    double vlo = ulo, vhi = -ulo;
    auto grow = [&](const std::pair<double, double>& p) {
        ulo = std::min(ulo, p.first);
        uhi = std::max(uhi, p.first);
        vlo = std::min(vlo, p.second);
        vhi = std::max(vhi, p.second);
    };
    for (const auto& p : curve) grow(p);
    for (const auto& p : dots) grow(p);

    const double avail_w = spec.width * (1.0 - 2.0 * spec.margin);
    const double avail_h = spec.height * (1.0 - 2.0 * spec.margin);
    double scale = std::numeric_limits<double>::infinity();
    if (uhi - ulo > 1e-12) scale = avail_w / (uhi - ulo);
    if (vhi - vlo > 1e-12) scale = std::min(scale, avail_h / (vhi - vlo));
    if (!std::isfinite(scale)) scale = 1.0;
    const double umid = (ulo + uhi) / 2.0, vmid = (vlo + vhi) / 2.0;
    auto to_screen = [&](const std::pair<double, double>& p) {
        return std::pair<double, double>{spec.width / 2.0 + scale * (p.first - umid),
                                         spec.height / 2.0 + scale * (p.second - vmid)};
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    svg += "<path d=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        auto [x, y] = to_screen(curve[i]);
        svg += (i == 0 ? "M " : " L ");
        svg += fmt_px(x);
        svg += ' ';
        svg += fmt_px(y);
    }
    svg += " Z\" fill=\"none\" stroke=\"#1f2933\" stroke-width=\"1.5\"/>\n";
    if (draw_overlay) {
        svg += "<g fill=\"#c0392b\" fill-opacity=\"0.55\">\n";
        for (const auto& p : dots) {
            auto [x, y] = to_screen(p);
            svg += "<circle cx=\"" + fmt_px(x) + "\" cy=\"" + fmt_px(y) + "\" r=\"2.5\"/>\n";
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace polarfit
