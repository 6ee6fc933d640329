#pragma once

// Output plumbing for the CLI: 12-significant-digit number formatting,
// CSV tables, minimal static SVG line plots, and the run manifest.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace graysim::io {

// All serialized numbers carry 12 significant digits so reruns diff cleanly.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline double round_12(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string str() const {
        std::string out;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ',';
            out += columns[c];
        }
        out += '\n';
        for (const auto& row : rows) {
            if (row.size() != columns.size())
                throw std::invalid_argument("CsvTable: row width does not match header");
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += format_double(row[c]);
            }
            out += '\n';
        }
        return out;
    }
};

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path.string());
    f << contents;
}

inline void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    write_file(path, j.dump(2) + "\n");
}

// A small static line plot: one polyline per y-column of the table, the
// first column as x.
inline std::string svg_line_plot(const CsvTable& table, const std::string& title) {
    if (table.columns.size() < 2) throw std::invalid_argument("svg_line_plot: need x and y columns");
    const double width = 880, height = 560;
    const double ml = 70, mr = 170, mt = 50, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = 1e300, xmax = -1e300, ymin = 0.0, ymax = -1e300;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            ymin = std::min(ymin, row[c]);
            ymax = std::max(ymax, row[c]);
        }
    }
    if (table.rows.empty() || xmax <= xmin) { xmin = 0; xmax = 1; }
    if (ymax <= ymin) ymax = ymin + 1;
    ymax += 0.05 * (ymax - ymin);

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2"};
    std::string s;
    char buf[256];
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"880\" height=\"560\" "
         "viewBox=\"0 0 880 560\">\n";
    s += "<rect width=\"880\" height=\"560\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\">%s</text>\n",
                  ml, title.c_str());
    s += buf;

    // Axes and ticks.
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", ml, mt + ph,
                  ml + pw, mt + ph);
    s += buf;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", ml, mt, ml,
                  mt + ph);
    s += buf;
    for (int t = 0; t <= 5; ++t) {
        const double fx = xmin + (xmax - xmin) * t / 5.0;
        const double fy = ymin + (ymax - ymin) * t / 5.0;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
                      "text-anchor=\"middle\">%.3g</text>\n",
                      px(fx), mt + ph + 18, fx);
        s += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"11\" "
                      "text-anchor=\"end\">%.3g</text>\n",
                      ml - 6, py(fy) + 4, fy);
        s += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" font-size=\"13\" "
                  "text-anchor=\"middle\">%s</text>\n",
                  ml + pw / 2, height - 12, table.columns[0].c_str());
    s += buf;

    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = palette[(c - 1) % 7];
        std::string pts;
        for (const auto& row : table.rows) {
            std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(row[0]), py(row[c]));
            pts += buf;
        }
        std::snprintf(buf, sizeof(buf),
                      "<polyline fill=\"none\" stroke=\"%s\" stroke-width=\"1.6\" points=\"%s\"/>\n",
                      color, pts.c_str());
        s += buf;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" "
                      "stroke-width=\"2\"/><text x=\"%g\" y=\"%g\" font-family=\"sans-serif\" "
                      "font-size=\"12\">%s</text>\n",
                      ml + pw + 12, mt + 18.0 * c, ml + pw + 34, mt + 18.0 * c, color, ml + pw + 40,
                      mt + 18.0 * c + 4, table.columns[c].c_str());
        s += buf;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace graysim::io
