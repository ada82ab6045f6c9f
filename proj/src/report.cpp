#include "trac/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "trac/errors.hpp"

namespace trac {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string sci6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string tick6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string sweep_csv(const SweepReport& report) {
    std::string out = "k,p_star,min_entropy,cell_i,cell_j,cell_a,cell_b\n";
    for (const auto& pt : report.points) {
        out += fixed6(pt.k_value) + ',' + fixed6(pt.p_star) + ',' + fixed6(pt.min_entropy) +
               ',' + std::to_string(pt.argmax_cell.i + 1) + ',' +
               std::to_string(pt.argmax_cell.j + 1) + ',' + std::to_string(pt.argmax_cell.a) +
               ',' + std::to_string(pt.argmax_cell.b) + '\n';
    }
    return out;
}

std::string fit_csv(const SweepReport& report) {
    std::string out = "n,alpha_fit,beta_fit,alpha_paper,beta_paper,max_residual\n";
    out += std::to_string(report.n) + ',' + fixed6(report.alpha_fit) + ',' +
           fixed6(report.beta_fit) + ',' + fixed6(report.alpha_claimed) + ',' +
           fixed6(report.beta_claimed) + ',' + sci6(report.max_residual) + '\n';
    return out;
}

std::string fit_text(const SweepReport& report) {
    std::string out;
    out += "fit: p_star = " + fixed6(report.beta_fit) + " + " + fixed6(report.alpha_fit) +
           " * k (max residual " + sci6(report.max_residual) + ")\n";
    out += "published line: beta " + fixed6(report.beta_claimed) + ", alpha " +
           fixed6(report.alpha_claimed) + "\n";
    out += "anchor line (enumerated classical max): beta " +
           fixed6(report.beta_anchor_oracle) + ", alpha " + fixed6(report.alpha_anchor_oracle) +
           "\n";
    out += "anchor line (claimed classical max): beta " + fixed6(report.beta_anchor_claimed) +
           ", alpha " + fixed6(report.alpha_anchor_claimed) + "\n";
    return out;
}

std::string restarts_csv(const OptimumReport& report) {
    std::string out = "restart,k,sweeps,perturbations\n";
    for (const auto& r : report.restarts) {
        out += std::to_string(r.restart) + ',' + fixed6(r.k) + ',' + std::to_string(r.sweeps) +
               ',' + std::to_string(r.perturbations) + '\n';
    }
    return out;
}

std::string render_svg(const CurveData& curve) {
    if (curve.points.empty()) throw ValidationError("render_svg: no points to plot");

    constexpr double left = 80.0, right = 770.0, top = 30.0, bottom = 540.0;

    double x_min = curve.points.front().first, x_max = x_min;
    double y_min = curve.points.front().second, y_max = y_min;
    for (const auto& [x, y] : curve.points) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (x_max - x_min < 1e-300) { x_min -= 0.5; x_max += 0.5; }
    if (y_max - y_min < 1e-300) { y_min -= 0.5; y_max += 0.5; }

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * (right - left); };
    auto py = [&](double y) { return bottom - (y - y_min) / (y_max - y_min) * (bottom - top); };
    auto coord = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + coord(left) + "\" y1=\"" + coord(bottom) + "\" x2=\"" + coord(right) +
           "\" y2=\"" + coord(bottom) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + coord(left) + "\" y1=\"" + coord(bottom) + "\" x2=\"" + coord(left) +
           "\" y2=\"" + coord(top) + "\" stroke=\"black\"/>\n";

    for (int t = 0; t < 5; ++t) {
        const double fx = x_min + (x_max - x_min) * t / 4.0;
        const double gx = px(fx);
        svg += "<line x1=\"" + coord(gx) + "\" y1=\"" + coord(bottom) + "\" x2=\"" + coord(gx) +
               "\" y2=\"" + coord(bottom + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + coord(gx) + "\" y=\"" + coord(bottom + 22) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
               tick6(fx) + "</text>\n";
        const double fy = y_min + (y_max - y_min) * t / 4.0;
        const double gy = py(fy);
        svg += "<line x1=\"" + coord(left - 6) + "\" y1=\"" + coord(gy) + "\" x2=\"" +
               coord(left) + "\" y2=\"" + coord(gy) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + coord(left - 10) + "\" y=\"" + coord(gy + 4) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">" + tick6(fy) +
               "</text>\n";
    }
    svg += "<text x=\"" + coord((left + right) / 2) + "\" y=\"" + coord(bottom + 45) +
           "\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">" +
           curve.x_label + "</text>\n";
    svg += "<text x=\"" + coord(left) + "\" y=\"" + coord(top - 10) +
           "\" font-family=\"monospace\" font-size=\"14\">" + curve.y_label + "</text>\n";

    svg += "<polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : curve.points) {
        if (!first) svg += ' ';
        svg += coord(px(x)) + ',' + coord(py(y));
        first = false;
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

std::uint64_t default_seed_from_env() {
    const char* raw = std::getenv("TEMPORAL_RAC_SEED");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    errno = 0;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (errno != 0 || end == raw || *end != '\0' || raw[0] == '-') {
        throw ValidationError(std::string("TEMPORAL_RAC_SEED is not a valid unsigned integer: '") +
                              raw + "'");
    }
    return static_cast<std::uint64_t>(parsed);
}

} // namespace trac
