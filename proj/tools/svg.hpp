#pragma once

#include <string>
#include <vector>

#include "mtopdiv/persistence.hpp"

namespace mtd::svg {

/// Horizontal bars grouped by dimension over a filtration-value axis.
/// Essential intervals run to the right edge and end in an arrow.
std::string barcode(const Barcode& barcode, const std::string& title);

struct Series {
    std::string name;
    std::vector<double> y;
};

/// Line plot of each series against x, sharing one y axis.
std::string trend(const std::vector<double>& x, const std::vector<Series>& series, const std::string& x_label,
                  const std::string& title);

}  // namespace mtd::svg
