#pragma once

// Shared helpers for the unit and acceptance suites: sample builders, CLI
// capture, scratch files, SVG path extraction, and a small XML
// well-formedness scanner.

#include <unistd.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polarfit/cli.hpp"
#include "polarfit/contour.hpp"
#include "polarfit/error.hpp"

namespace testutil {

inline polarfit::PolarSamples uniform_samples(const std::vector<double>& rs) {
    polarfit::PolarSamples p;
    p.uniform = true;
    const int n = static_cast<int>(rs.size());
    p.samples.reserve(rs.size());
    for (int i = 0; i < n; ++i) p.samples.push_back({polarfit::grid_angle(i, n), rs[i]});
    return p;
}

template <typename Fn>
inline std::optional<polarfit::Errc> error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const polarfit::Error& e) {
        return e.code();
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = polarfit::cli::run(args);
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

inline std::filesystem::path scratch_dir() {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("polarfit_test_" + std::to_string(++counter) + "_" +
                std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

// Crescent between circle A (center origin, radius 2) and bite circle B
// (center (2,0), radius 1.3). Its vertex centroid sits inside the solid
// sliver, and rays toward the horns cross the boundary more than once, so
// r(theta) is multi-valued there.
inline std::vector<polarfit::Point> crescent_points() {
    const double pi = 3.14159265358979323846;
    const double ra = 2.0, rb = 1.3;
    const double bx = 2.0;
    const double tip_x = (bx * bx + ra * ra - rb * rb) / (2.0 * bx);
    const double tip_y = std::sqrt(ra * ra - tip_x * tip_x);
    const double tip_a = std::atan2(tip_y, tip_x);            // on A, ~37.9 deg
    const double tip_b = std::atan2(tip_y, tip_x - bx);       // on B, ~109 deg

    std::vector<polarfit::Point> pts;
    const int na = 57;  // dense outer arc keeps the centroid in the sliver
    for (int i = 0; i < na; ++i) {
        double t = tip_a + (2.0 * pi - 2.0 * tip_a) * i / (na - 1);
        pts.push_back({ra * std::cos(t), ra * std::sin(t)});
    }
    const int nb = 10;
    for (int i = 1; i + 1 < nb; ++i) {
        double t = -tip_b - (2.0 * pi - 2.0 * tip_b) * i / (nb - 1);
        pts.push_back({bx + rb * std::cos(t), rb * std::sin(t)});
    }
    return pts;
}

inline std::string contour_csv(const std::vector<polarfit::Point>& pts) {
    std::string out;
    char buf[96];
    for (const polarfit::Point& p : pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

// Points of the single path element's d attribute (M/L commands).
inline std::vector<std::pair<double, double>> path_points(const std::string& svg) {
    std::vector<std::pair<double, double>> pts;
    std::size_t start = svg.find("d=\"");
    if (start == std::string::npos) return pts;
    start += 3;
    std::size_t end = svg.find('"', start);
    std::istringstream body(svg.substr(start, end - start));
    std::string tok;
    while (body >> tok) {
        if (tok == "M" || tok == "L") {
            double x = 0.0, y = 0.0;
            if (body >> x >> y) pts.emplace_back(x, y);
        }
    }
    return pts;
}

// Minimal XML well-formedness scan: balanced tags, quoted attributes,
// exactly one root element, nothing but space outside it.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    int roots = 0;
    bool root_closed = false;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto read_name = [&](std::size_t& pos) {
        std::string name;
        while (pos < n && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                           text[pos] == ':' || text[pos] == '_' || text[pos] == '-' ||
                           text[pos] == '.')) {
            name += text[pos++];
        }
        return name;
    };

    while (i < n) {
        if (text[i] != '<') {
            if (std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            if (stack.empty()) return fail("character data outside the root element");
            if (text[i] == '&') {
                std::size_t semi = text.find(';', i);
                if (semi == std::string::npos || semi - i > 10)
                    return fail("unterminated entity reference");
                i = semi + 1;
                continue;
            }
            ++i;
            continue;
        }
        if (text.compare(i, 2, "<?") == 0) {
            std::size_t close = text.find("?>", i);
            if (close == std::string::npos) return fail("unterminated processing instruction");
            i = close + 2;
            continue;
        }
        if (text.compare(i, 4, "<!--") == 0) {
            std::size_t close = text.find("-->", i);
            if (close == std::string::npos) return fail("unterminated comment");
            i = close + 3;
            continue;
        }
        if (text.compare(i, 2, "<!") == 0) {
            std::size_t close = text.find('>', i);
            if (close == std::string::npos) return fail("unterminated declaration");
            i = close + 1;
            continue;
        }
        if (text.compare(i, 2, "</") == 0) {
            i += 2;
            std::string name = read_name(i);
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= n || text[i] != '>') return fail("malformed closing tag");
            ++i;
            if (stack.empty() || stack.back() != name)
                return fail("mismatched closing tag </" + name + ">");
            stack.pop_back();
            if (stack.empty()) root_closed = true;
            continue;
        }
        // opening tag
        ++i;
        if (root_closed) return fail("content after the root element");
        std::string name = read_name(i);
        if (name.empty()) return fail("tag without a name");
        bool self_closing = false;
        while (true) {
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            if (i >= n) return fail("unterminated tag <" + name + ">");
            if (text[i] == '>') {
                ++i;
                break;
            }
            if (text.compare(i, 2, "/>") == 0) {
                self_closing = true;
                i += 2;
                break;
            }
            std::string attr = read_name(i);
            if (attr.empty()) return fail("malformed attribute in <" + name + ">");
            if (i >= n || text[i] != '=') return fail("attribute without value in <" + name + ">");
            ++i;
            if (i >= n || (text[i] != '"' && text[i] != '\'')) return fail("unquoted attribute value");
            char quote = text[i++];
            std::size_t close = text.find(quote, i);
            if (close == std::string::npos) return fail("unterminated attribute value");
            i = close + 1;
        }
        if (stack.empty()) {
            ++roots;
            if (roots > 1) return fail("more than one root element");
        }
        if (!self_closing) {
            stack.push_back(name);
        } else if (stack.empty()) {
            root_closed = true;
        }
    }
    if (!stack.empty()) return fail("unclosed element <" + stack.back() + ">");
    if (roots != 1) return fail("expected exactly one root element");
    return true;
}

}  // namespace testutil
