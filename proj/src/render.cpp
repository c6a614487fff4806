#include "lfcs/render.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "lfcs/inference.hpp"
#include "lfcs/matching.hpp"

namespace lfcs {

void write_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

GrayImage render_class_landscape(Population& pop, const ExperimentConfig& cfg,
                                 int resolution, int fallback_class) {
  if (pop.dims() != 2) throw std::runtime_error("class landscape requires a 2-D population");
  GrayImage img;
  img.width = resolution;
  img.height = resolution;
  img.pixels.resize(static_cast<std::size_t>(resolution) * resolution);
  const int classes = pop.class_count();
  for (int row = 0; row < resolution; ++row) {
    const double x2 = (resolution - 1 - row + 0.5) / resolution;
    for (int col = 0; col < resolution; ++col) {
      const double x1 = (col + 0.5) / resolution;
      const int cls = predict(pop, {x1, x2}, cfg, fallback_class);
      const double level = classes > 1 ? 255.0 * cls / (classes - 1) : 0.0;
      img.at(row, col) = static_cast<std::uint8_t>(std::lround(level));
    }
  }
  return img;
}

GrayImage render_matching_landscape(const Population& pop, const std::vector<int>& rule_indices,
                                    int resolution) {
  if (pop.dims() != 2) throw std::runtime_error("matching landscape requires a 2-D population");
  std::vector<const Rule*> rules;
  for (int idx : rule_indices) {
    if (idx < 0 || idx >= pop.macro_count()) {
      throw std::runtime_error("rule index " + std::to_string(idx) + " out of range (population has " +
                               std::to_string(pop.macro_count()) + " rules)");
    }
    rules.push_back(pop.rules()[idx].get());
  }
  GrayImage img;
  img.width = resolution;
  img.height = resolution;
  img.pixels.resize(static_cast<std::size_t>(resolution) * resolution);
  for (int row = 0; row < resolution; ++row) {
    const double x2 = (resolution - 1 - row + 0.5) / resolution;
    for (int col = 0; col < resolution; ++col) {
      const double x1 = (col + 0.5) / resolution;
      double mu = 0.0;
      for (const Rule* r : rules) {
        mu = std::max(mu, matching_degree(r->condition, {x1, x2}));
      }
      img.at(row, col) = static_cast<std::uint8_t>(std::lround(255.0 * mu));
    }
  }
  return img;
}

}  // namespace lfcs
