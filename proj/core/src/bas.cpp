#include "qcbm/bas.hpp"

#include <stdexcept>

namespace qcbm {

std::set<std::uint32_t> bas_patterns(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("bas_patterns: rows and cols must be >= 1");
    }
    const int n_bits = rows * cols;
    std::set<std::uint32_t> patterns;

    auto pixel_bit = [&](int r, int c) {
        return std::uint32_t{1} << (n_bits - 1 - (r * cols + c));
    };

    // Bars: each row is constant.
    for (std::uint32_t rowmask = 0; rowmask < (std::uint32_t{1} << rows); ++rowmask) {
        std::uint32_t img = 0;
        for (int r = 0; r < rows; ++r) {
            if (rowmask & (std::uint32_t{1} << r)) {
                for (int c = 0; c < cols; ++c) img |= pixel_bit(r, c);
            }
        }
        patterns.insert(img);
    }
    // Stripes: each column is constant.
    for (std::uint32_t colmask = 0; colmask < (std::uint32_t{1} << cols); ++colmask) {
        std::uint32_t img = 0;
        for (int c = 0; c < cols; ++c) {
            if (colmask & (std::uint32_t{1} << c)) {
                for (int r = 0; r < rows; ++r) img |= pixel_bit(r, c);
            }
        }
        patterns.insert(img);
    }
    return patterns;
}

Distribution bas_target(int rows, int cols) {
    const auto patterns = bas_patterns(rows, cols);
    const int n_bits = rows * cols;
    std::vector<double> p(std::size_t{1} << n_bits, 0.0);
    const double w = 1.0 / static_cast<double>(patterns.size());
    for (auto idx : patterns) p[idx] = w;
    return Distribution(n_bits, std::move(p));
}

} // namespace qcbm
