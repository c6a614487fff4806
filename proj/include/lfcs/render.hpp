#pragma once

#include <string>
#include <vector>

#include "lfcs/config.hpp"
#include "lfcs/population.hpp"

namespace lfcs {

// Binary (P5) grayscale PGM.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major, row 0 at top

  std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
  std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
};

void write_pgm(const GrayImage& img, const std::string& path);

// Predicted-class landscape over [0,1)^2 for a 2-D population. Pixel centers
// sample the unit square; intensity is 255*class/(classes-1); row 0 holds the
// top of the plot (x2 near 1).
GrayImage render_class_landscape(Population& pop, const ExperimentConfig& cfg,
                                 int resolution, int fallback_class);

// Matching-degree landscape for the selected rules: intensity
// round(255 * mu), taking the max over the listed rules at each pixel.
GrayImage render_matching_landscape(const Population& pop, const std::vector<int>& rule_indices,
                                    int resolution);

}  // namespace lfcs
