#include "experiments.hpp"

#include <charconv>
#include <cmath>

#include "mtopdiv/crossbarcode.hpp"
#include "mtopdiv/errors.hpp"
#include "mtopdiv/mtopdiv.hpp"
#include "mtopdiv/random.hpp"
#include "mtopdiv/synth.hpp"

namespace mtd::experiments {

namespace {

double parse_double(std::string_view text, const std::string& what) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        throw InvalidInput("invalid " + what + " '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

GeneratorSpec shape(GeneratorKind kind, std::size_t n, double x, std::uint64_t seed) {
    GeneratorSpec s;
    s.kind = kind;
    s.n = n;
    s.center = {x, 0.0};
    s.radius = 1.0;
    s.seed = seed;
    return s;
}

double max_length(const std::vector<Interval>& intervals) {
    return barcode_stat(intervals, {StatKind::max}).value;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw InvalidInput("range must look like a:b:step, got '" + text + "'");
    const double a = parse_double(parts[0], "range start");
    const double b = parse_double(parts[1], "range end");
    const double step = parse_double(parts[2], "range step");
    if (step <= 0.0 || b < a) throw InvalidInput("range needs a <= b and step > 0, got '" + text + "'");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> values;
    for (std::size_t i = 0; i < count; ++i) values.push_back(a + static_cast<double>(i) * step);
    return values;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    for (const auto part : split(text, ',')) {
        std::size_t value = 0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || end != part.data() + part.size() || value == 0) {
            throw InvalidInput("invalid size '" + std::string(part) + "'");
        }
        sizes.push_back(value);
    }
    return sizes;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    for (const auto part : split(text, ',')) values.push_back(parse_double(part, "number"));
    return values;
}

RingsRow rings_row(double d, const RingsConfig& cfg) {
    Rng rng(cfg.seed);
    const auto p = generate(shape(GeneratorKind::ring, cfg.n, 0.0, rng.next_u64()));
    const auto q = generate(shape(GeneratorKind::ring, cfg.n, d, rng.next_u64()));
    const auto barcodes = subsampled_cross_barcodes(p, q, cfg.b_p, cfg.b_q, cfg.runs, 1, cfg.seed);
    std::vector<double> sums;
    double h0 = 0.0;
    for (const auto& b : barcodes) {
        sums.push_back(barcode_stat(b[1], {StatKind::sum}).value);
        h0 += max_length(b[0]);
    }
    const auto summary = summarize("PQ", std::move(sums));
    return {d, summary.mean, summary.std_error, h0 / static_cast<double>(barcodes.size())};
}

DisksRow disks_row(double d, std::size_t n, std::size_t seeds, std::uint64_t seed) {
    if (seeds == 0) throw InvalidInput("disks: at least one seed is required");
    double h0 = 0.0;
    double h1 = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
        Rng rng = Rng(seed).substream(s);
        const auto p = generate(shape(GeneratorKind::disk, n, 0.0, rng.next_u64()));
        const auto q = generate(shape(GeneratorKind::disk, n, d, rng.next_u64()));
        const auto b = cross_barcode(p, q, 1);
        h0 += max_length(b[0]);
        h1 += barcode_stat(b[1], {StatKind::sum}).value;
    }
    const auto m = static_cast<double>(seeds);
    return {d, h0 / m, h1 / m};
}

DecayRow decay_row(std::size_t n, std::size_t seeds, std::uint64_t seed) {
    if (seeds == 0) throw InvalidInput("decay: at least one seed is required");
    double h1 = 0.0;
    for (std::size_t s = 0; s < seeds; ++s) {
        Rng rng = Rng(seed).substream(s);
        const auto p = generate(shape(GeneratorKind::disk, n, 0.0, rng.next_u64()));
        const auto q = generate(shape(GeneratorKind::disk, n, 0.0, rng.next_u64()));
        h1 += max_length(cross_barcode(p, q, 1)[1]);
    }
    return {n, h1 / static_cast<double>(seeds)};
}

}  // namespace mtd::experiments
