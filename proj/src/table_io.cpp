// Copyright 2026 the thzprop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thzprop/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <vector>

#include "thzprop/errors.hpp"

namespace thzprop {

namespace {

std::string shortest(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Fixed two-decimal formatting for SVG pixel coordinates.
std::string px(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_double(const std::string& field, std::size_t line_no)
{
    double v = 0.0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw parse_error("malformed number '" + field + "' at line " + std::to_string(line_no));
    }
    return v;
}

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
};

struct AxisTicks {
    std::vector<double> values;
    double lo, hi; // plotted range (already in log10 space for log axes)
};

AxisTicks linear_ticks(double lo, double hi)
{
    if (lo == hi) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double span = hi - lo;
    const double raw_step = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw_step) {
            step = mag * m;
            break;
        }
    }
    AxisTicks t;
    t.lo = std::floor(lo / step) * step;
    t.hi = std::ceil(hi / step) * step;
    for (double v = t.lo; v <= t.hi + 0.5 * step; v += step) {
        t.values.push_back(v);
    }
    return t;
}

AxisTicks log_ticks(double lo, double hi)
{
    AxisTicks t;
    t.lo = std::floor(std::log10(lo));
    t.hi = std::ceil(std::log10(hi));
    if (t.hi == t.lo) {
        t.hi = t.lo + 1;
    }
    for (double e = t.lo; e <= t.hi + 0.5; e += 1.0) {
        t.values.push_back(e);
    }
    return t;
}

} // namespace

std::string to_csv(const SweepTable& table)
{
    std::string out = table.x_label();
    for (const auto& s : table.series()) {
        out += ',';
        out += s.label;
    }
    out += '\n';
    for (std::size_t i = 0; i < table.x().size(); ++i) {
        out += shortest(table.x()[i]);
        for (const auto& s : table.series()) {
            out += ',';
            out += shortest(s.y[i]);
        }
        out += '\n';
    }
    return out;
}

SweepTable sweep_from_csv(std::istream& source)
{
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(source, line)) {
        throw parse_error("empty CSV: missing header");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    const auto header = split_fields(line);
    if (header.size() < 2 || header.front().empty()) {
        throw parse_error("CSV header needs an x column and at least one series");
    }

    std::vector<double> x;
    std::vector<SweepTable::Series> series(header.size() - 1);
    for (std::size_t i = 0; i < series.size(); ++i) {
        series[i].label = header[i + 1];
    }

    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto fields = split_fields(line);
        if (fields.size() != header.size()) {
            throw parse_error("expected " + std::to_string(header.size()) + " fields at line " +
                              std::to_string(line_no));
        }
        x.push_back(parse_double(fields[0], line_no));
        for (std::size_t i = 0; i < series.size(); ++i) {
            series[i].y.push_back(parse_double(fields[i + 1], line_no));
        }
    }
    return SweepTable(header.front(), std::move(x), std::move(series));
}

std::string to_svg(const SweepTable& table, const SvgOptions& opt)
{
    const double ml = 70, mr = 20, mt = opt.title.empty() ? 20 : 44, mb = 46;
    const double pw = opt.width - ml - mr;  // plot area
    const double ph = opt.height - mt - mb;

    const auto tx = [&](double v) { return opt.log_x ? std::log10(v) : v; };
    const auto ty = [&](double v) { return opt.log_y ? std::log10(v) : v; };
    const auto plottable_y = [&](double v) {
        return std::isfinite(v) && (!opt.log_y || v > 0.0);
    };

    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    for (const auto& s : table.series()) {
        for (double v : s.y) {
            if (plottable_y(v)) {
                ymin = std::min(ymin, v);
                ymax = std::max(ymax, v);
            }
        }
    }
    if (!(ymin <= ymax)) {
        throw numeric_error("no plottable points for SVG output");
    }

    const AxisTicks xt = opt.log_x ? log_ticks(table.x().front(), table.x().back())
                                   : linear_ticks(table.x().front(), table.x().back());
    const AxisTicks yt = opt.log_y ? log_ticks(ymin, ymax) : linear_ticks(ymin, ymax);

    const auto sx = [&](double v) { return ml + (tx(v) - xt.lo) / (xt.hi - xt.lo) * pw; };
    const auto sy = [&](double v) { return mt + ph - (ty(v) - yt.lo) / (yt.hi - yt.lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\""
        << opt.height << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!opt.title.empty()) {
        svg << "<text x=\"" << px(ml + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"15\">" << opt.title << "</text>\n";
    }

    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (double v : xt.values) {
        const double gx = ml + (v - xt.lo) / (xt.hi - xt.lo) * pw;
        svg << "<line x1=\"" << px(gx) << "\" y1=\"" << px(mt) << "\" x2=\"" << px(gx)
            << "\" y2=\"" << px(mt + ph) << "\" stroke=\"#ddd\"/>\n";
        const std::string label = opt.log_x ? ("1e" + shortest(v)) : shortest(v);
        svg << "<text x=\"" << px(gx) << "\" y=\"" << px(mt + ph + 16)
            << "\" text-anchor=\"middle\">" << label << "</text>\n";
    }
    for (double v : yt.values) {
        const double gy = mt + ph - (v - yt.lo) / (yt.hi - yt.lo) * ph;
        svg << "<line x1=\"" << px(ml) << "\" y1=\"" << px(gy) << "\" x2=\"" << px(ml + pw)
            << "\" y2=\"" << px(gy) << "\" stroke=\"#ddd\"/>\n";
        const std::string label = opt.log_y ? ("1e" + shortest(v)) : shortest(v);
        svg << "<text x=\"" << px(ml - 6) << "\" y=\"" << px(gy + 4)
            << "\" text-anchor=\"end\">" << label << "</text>\n";
    }
    svg << "<text x=\"" << px(ml + pw / 2) << "\" y=\"" << px(mt + ph + 36)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << table.x_label() << "</text>\n";
    if (!opt.y_label.empty()) {
        svg << "<text x=\"16\" y=\"" << px(mt + ph / 2)
            << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
            << px(mt + ph / 2) << ")\">" << opt.y_label << "</text>\n";
    }
    svg << "</g>\n";

    svg << "<rect x=\"" << px(ml) << "\" y=\"" << px(mt) << "\" width=\"" << px(pw)
        << "\" height=\"" << px(ph) << "\" fill=\"none\" stroke=\"#333\"/>\n";

    for (std::size_t si = 0; si < table.series().size(); ++si) {
        const auto& s = table.series()[si];
        const char* color = kPalette[si % 8];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < table.x().size(); ++i) {
            if (!plottable_y(s.y[i])) {
                continue;
            }
            if (!first) {
                svg << ' ';
            }
            svg << px(sx(table.x()[i])) << ',' << px(sy(s.y[i]));
            first = false;
        }
        svg << "\"/>\n";
        const double lx = ml + pw - 170;
        const double ly = mt + 16 + 16 * static_cast<double>(si);
        svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly - 4) << "\" x2=\"" << px(lx + 22)
            << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << px(lx + 28) << "\" y=\"" << px(ly)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace thzprop
