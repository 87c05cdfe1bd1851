// SPDX-License-Identifier: Apache-2.0
//
// Self-contained heatmap emission for pattern maps: PNG (via zlib) or
// SVG, with a fixed perceptual colormap. Images are for visual
// inspection; CSV/JSON carry the testable data.
#ifndef GOLAYBEAM_HEATMAP_HPP
#define GOLAYBEAM_HEATMAP_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include <zlib.h>

#include "golaybeam/errors.hpp"
#include "golaybeam/sweep.hpp"

namespace golaybeam {
namespace heatmap {

namespace detail {

// Viridis control points, interpolated linearly.
inline std::array<std::uint8_t, 3> colormap(double t) {
    static const std::array<std::array<double, 3>, 9> pts = {{{68, 1, 84},
                                                              {71, 44, 122},
                                                              {59, 81, 139},
                                                              {44, 113, 142},
                                                              {33, 144, 141},
                                                              {39, 173, 129},
                                                              {92, 200, 99},
                                                              {170, 220, 50},
                                                              {253, 231, 37}}};
    t = std::clamp(t, 0.0, 1.0);
    const double x = t * (pts.size() - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(x), pts.size() - 2);
    const double f = x - static_cast<double>(i);
    std::array<std::uint8_t, 3> c{};
    for (int k = 0; k < 3; ++k)
        c[k] = static_cast<std::uint8_t>(pts[i][k] + f * (pts[i + 1][k] - pts[i][k]) + 0.5);
    return c;
}

inline void put_be32(std::string &s, std::uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

inline void put_chunk(std::string &out, const char type[4], const std::string &data) {
    put_be32(out, static_cast<std::uint32_t>(data.size()));
    std::string body(type, 4);
    body += data;
    out += body;
    const auto crc =
        crc32(0L, reinterpret_cast<const Bytef *>(body.data()), static_cast<uInt>(body.size()));
    put_be32(out, static_cast<std::uint32_t>(crc));
}

// Minimal truecolor PNG: filter 0 scanlines, one zlib IDAT.
inline std::string encode_png(std::size_t width, std::size_t height,
                              const std::vector<std::uint8_t> &rgb) {
    std::string raw;
    raw.reserve(height * (1 + 3 * width));
    for (std::size_t y = 0; y < height; ++y) {
        raw.push_back('\0');
        raw.append(reinterpret_cast<const char *>(&rgb[y * width * 3]), width * 3);
    }
    uLongf comp_len = compressBound(static_cast<uLong>(raw.size()));
    std::vector<Bytef> comp(comp_len);
    if (compress2(comp.data(), &comp_len, reinterpret_cast<const Bytef *>(raw.data()),
                  static_cast<uLong>(raw.size()), 9) != Z_OK)
        throw invalid_input("png: zlib compression failed");

    std::string out("\x89PNG\r\n\x1a\n", 8);
    std::string ihdr;
    put_be32(ihdr, static_cast<std::uint32_t>(width));
    put_be32(ihdr, static_cast<std::uint32_t>(height));
    ihdr += std::string("\x08\x02\x00\x00\x00", 5); // 8-bit RGB
    put_chunk(out, "IHDR", ihdr);
    put_chunk(out, "IDAT", std::string(reinterpret_cast<char *>(comp.data()), comp_len));
    put_chunk(out, "IEND", "");
    return out;
}

} // namespace detail

// Rasterizes the map cell by cell: azimuth on x, elevation on y with the
// highest elevation at the top row.
inline void write_png(const std::string &path, const PatternMap &m, std::size_t target_px = 720) {
    const std::size_t na = m.grid.azimuth.size();
    const std::size_t ne = m.grid.elevation.size();
    const std::size_t sx = std::max<std::size_t>(1, target_px / na);
    const std::size_t sy = std::max<std::size_t>(1, target_px / ne);
    const std::size_t w = na * sx, h = ne * sy;
    double lo = m.values[0], hi = m.values[0];
    for (double v : m.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    std::vector<std::uint8_t> rgb(w * h * 3);
    for (std::size_t y = 0; y < h; ++y) {
        const std::size_t ie = ne - 1 - y / sy;
        for (std::size_t x = 0; x < w; ++x) {
            const auto c = detail::colormap((m.at(ie, x / sx) - lo) / span);
            std::memcpy(&rgb[(y * w + x) * 3], c.data(), 3);
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw invalid_input("cannot write file: " + path);
    out << detail::encode_png(w, h, rgb);
}

inline void write_svg(const std::string &path, const PatternMap &m, std::size_t cell_px = 6) {
    const std::size_t na = m.grid.azimuth.size();
    const std::size_t ne = m.grid.elevation.size();
    double lo = m.values[0], hi = m.values[0];
    for (double v : m.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi > lo ? hi - lo : 1.0;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(na * cell_px) + "\" height=\"" + std::to_string(ne * cell_px) +
                      "\">\n";
    char buf[160];
    for (std::size_t ie = 0; ie < ne; ++ie)
        for (std::size_t ia = 0; ia < na; ++ia) {
            const auto c = detail::colormap((m.at(ie, ia) - lo) / span);
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%zu\" y=\"%zu\" width=\"%zu\" height=\"%zu\" "
                          "fill=\"rgb(%u,%u,%u)\"/>\n",
                          ia * cell_px, (ne - 1 - ie) * cell_px, cell_px, cell_px, c[0], c[1],
                          c[2]);
            svg += buf;
        }
    svg += "</svg>\n";
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw invalid_input("cannot write file: " + path);
    out << svg;
}

} // namespace heatmap
} // namespace golaybeam

#endif
