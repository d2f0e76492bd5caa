#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mtd::svg {

namespace {

constexpr double kWidth = 720.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round step of 1, 2 or 5 times a power of ten giving about five ticks.
double tick_step(double span) {
    if (span <= 0.0) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

void open(std::ostringstream& out, double height, const std::string& title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth) << "\" height=\"" << fixed(height)
        << "\" viewBox=\"0 0 " << fixed(kWidth) << ' ' << fixed(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
        << "</text>\n";
}

void x_axis(std::ostringstream& out, double y, double lo, double hi, const std::string& name) {
    const double plot = kWidth - kLeft - kRight;
    out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(kWidth - kRight) << "\" y2=\""
        << fixed(y) << "\" stroke=\"black\"/>\n";
    const double step = tick_step(hi - lo);
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
        const double x = kLeft + (hi > lo ? (t - lo) / (hi - lo) : 0.0) * plot;
        out << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x) << "\" y2=\""
            << fixed(y + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y + 18) << "\" text-anchor=\"middle\">"
            << label(std::abs(t) < 1e-12 * step ? 0.0 : t) << "</text>\n";
    }
    out << "<text x=\"" << fixed(kLeft + plot / 2) << "\" y=\"" << fixed(y + 38) << "\" text-anchor=\"middle\">"
        << escape(name) << "</text>\n";
}

}  // namespace

std::string barcode(const Barcode& barcode, const std::string& title) {
    constexpr double kRow = 8.0;
    constexpr double kGap = 24.0;
    double hi = 0.0;
    std::size_t rows = 0;
    for (std::size_t k = 0; k <= barcode.max_hom_dim(); ++k) {
        rows += barcode[k].size();
        for (const auto& iv : barcode[k]) hi = std::max(hi, std::isinf(iv.death) ? iv.birth : iv.death);
    }
    if (hi <= 0.0) hi = 1.0;
    const double plot = kWidth - kLeft - kRight;
    const double groups = static_cast<double>(barcode.max_hom_dim() + 1);
    const double axis_y = kTop + static_cast<double>(rows) * kRow + groups * kGap;

    std::ostringstream out;
    open(out, axis_y + kBottom, title);
    double y = kTop;
    for (std::size_t k = 0; k <= barcode.max_hom_dim(); ++k) {
        const char* color = kColors[k % 5];
        out << "<g stroke=\"" << color << "\" stroke-width=\"3\">\n"
            << "<text x=\"8\" y=\"" << fixed(y + 12) << "\" stroke=\"none\" fill=\"" << color << "\">H" << k
            << "</text>\n";
        y += kGap / 2;
        for (const auto& iv : barcode[k]) {
            const double x0 = kLeft + iv.birth / hi * plot;
            const double x1 = iv.is_essential() ? kWidth - kRight : kLeft + iv.death / hi * plot;
            out << "<line x1=\"" << fixed(x0) << "\" y1=\"" << fixed(y) << "\" x2=\"" << fixed(x1) << "\" y2=\""
                << fixed(y) << "\"";
            if (iv.is_essential() || iv.truncated) out << " stroke-dasharray=\"6 3\"";
            out << "/>\n";
            y += kRow;
        }
        y += kGap / 2;
        out << "</g>\n";
    }
    x_axis(out, axis_y, 0.0, hi, "filtration value");
    out << "</svg>\n";
    return out.str();
}

std::string trend(const std::vector<double>& x, const std::vector<Series>& series, const std::string& x_label,
                  const std::string& title) {
    constexpr double kHeight = 420.0;
    double x_lo = x.empty() ? 0.0 : *std::min_element(x.begin(), x.end());
    double x_hi = x.empty() ? 1.0 : *std::max_element(x.begin(), x.end());
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    double y_lo = 0.0;
    double y_hi = 0.0;
    for (const auto& s : series) {
        for (double v : s.y) {
            if (std::isfinite(v)) {
                y_lo = std::min(y_lo, v);
                y_hi = std::max(y_hi, v);
            }
        }
    }
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;

    const double plot_w = kWidth - kLeft - kRight;
    const double axis_y = kHeight - kBottom;
    const double plot_h = axis_y - kTop;
    const auto px = [&](double v) { return kLeft + (v - x_lo) / (x_hi - x_lo) * plot_w; };
    const auto py = [&](double v) { return axis_y - (v - y_lo) / (y_hi - y_lo) * plot_h; };

    std::ostringstream out;
    open(out, kHeight, title);
    out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(kLeft) << "\" y2=\""
        << fixed(axis_y) << "\" stroke=\"black\"/>\n";
    const double step = tick_step(y_hi - y_lo);
    for (double t = std::ceil(y_lo / step) * step; t <= y_hi + 1e-9 * step; t += step) {
        out << "<text x=\"" << fixed(kLeft - 6) << "\" y=\"" << fixed(py(t) + 4) << "\" text-anchor=\"end\">"
            << label(std::abs(t) < 1e-12 * step ? 0.0 : t) << "</text>\n";
    }
    x_axis(out, axis_y, x_lo, x_hi, x_label);

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kColors[i % 5];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t j = 0; j < x.size() && j < series[i].y.size(); ++j) {
            if (j > 0) out << ' ';
            out << fixed(px(x[j])) << ',' << fixed(py(series[i].y[j]));
        }
        out << "\"/>\n"
            << "<text x=\"" << fixed(kLeft + 10) << "\" y=\"" << fixed(kTop + 14 + 16 * static_cast<double>(i))
            << "\" fill=\"" << color << "\">" << escape(series[i].name) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace mtd::svg
