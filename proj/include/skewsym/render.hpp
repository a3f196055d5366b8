#pragma once

#include "skewsym/green.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace skewsym {

/// One rendered vertical slice {z} x window: the grid of fiberwise Green
/// values plus the extracted boundary band (0 < G <= band_tol).
struct JuliaSlice {
    Cplx z;
    Cplx center;
    double width = 4.0;
    int resolution = 512;
    double band_tol = 0.01;
    std::vector<float> green; // row-major, top-left origin
    std::vector<Cplx> boundary_points;
    double bounded_fraction = 0.0; // pixels with G == 0
    bool all_escaping = false;
    bool all_bounded = false; // possible K_z = C, flagged, never certified

    Cplx pixel_to_w(int ix, int iy) const {
        double step = width / resolution;
        double x0 = center.real() - width / 2 + step / 2;
        double y0 = center.imag() + width / 2 - step / 2;
        return {x0 + ix * step, y0 - iy * step};
    }
};

inline JuliaSlice render_slice(const GreenEvaluator& ev, Cplx z, Cplx center, double width,
                               int resolution, double band_tol = 0.01) {
    JuliaSlice s;
    s.z = z;
    s.center = center;
    s.width = width;
    s.resolution = resolution;
    s.band_tol = band_tol;
    s.green.assign(std::size_t(resolution) * resolution, 0.0f);

    int rows_per_task = std::max(1, resolution / int(2 * std::thread::hardware_concurrency() + 1));
    std::vector<std::future<void>> tasks;
    for (int y0 = 0; y0 < resolution; y0 += rows_per_task) {
        int y1 = std::min(resolution, y0 + rows_per_task);
        tasks.push_back(std::async(std::launch::async, [&, y0, y1] {
            for (int iy = y0; iy < y1; ++iy)
                for (int ix = 0; ix < resolution; ++ix) {
                    Cplx w = s.pixel_to_w(ix, iy);
                    s.green[std::size_t(iy) * resolution + ix] =
                        float(ev.green_fiber(z, w).value);
                }
        }));
    }
    for (auto& t : tasks) t.get();

    std::size_t zero_count = 0;
    for (int iy = 0; iy < resolution; ++iy)
        for (int ix = 0; ix < resolution; ++ix) {
            float g = s.green[std::size_t(iy) * resolution + ix];
            if (g <= 0.0f) ++zero_count;
            if (g > 0.0f && g <= band_tol) s.boundary_points.push_back(s.pixel_to_w(ix, iy));
        }
    s.bounded_fraction = double(zero_count) / double(s.green.size());
    s.all_bounded = (zero_count == s.green.size());
    s.all_escaping = (zero_count == 0) && s.boundary_points.empty();
    return s;
}

/// Binary PGM (P5), maxval 255, row-major from the top-left. Escaping
/// pixels shade by Green value, bounded pixels are black.
inline void write_pgm(const JuliaSlice& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot open output file: " + path);
    out << "P5\n" << s.resolution << " " << s.resolution << "\n255\n";
    float gmax = 0.0f;
    for (float g : s.green) gmax = std::max(gmax, g);
    std::vector<unsigned char> row(std::size_t(s.resolution));
    for (int iy = 0; iy < s.resolution; ++iy) {
        for (int ix = 0; ix < s.resolution; ++ix) {
            float g = s.green[std::size_t(iy) * s.resolution + ix];
            unsigned char v = 0;
            if (g > 0.0f && gmax > 0.0f) {
                double t = std::pow(double(g) / double(gmax), 0.25);
                v = static_cast<unsigned char>(40.0 + 215.0 * std::min(1.0, t));
            }
            row[std::size_t(ix)] = v;
        }
        out.write(reinterpret_cast<const char*>(row.data()), s.resolution);
    }
}

/// Symmetric discrete Hausdorff distance between two point sets, in
/// absolute w-plane units.
inline double hausdorff_distance(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    auto one_sided = [](const std::vector<Cplx>& from, const std::vector<Cplx>& to) {
        double worst = 0.0;
        for (const Cplx& x : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const Cplx& y : to) best = std::min(best, std::abs(x - y));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

} // namespace skewsym
