#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "varspace/grid.hpp"

namespace varspace {

inline constexpr std::uint64_t kCorpusSeed = 0xC0FFEE5EEDULL;

/// A continuous torus function, sampled independently of any grid so N and 2N see the same f.
struct CorpusEntry {
  std::string name;
  std::function<Complex(const Point&)> f;
};

/**
 * 50 real test functions: 20 band-limited random-phase sums (|k| <= 24 in 1D,
 * <= 12 in 2D), 10 periodized Gaussians of width 0.03..0.1, 10 single modes
 * (|k| <= 40) and 10 chirps cos(2 pi (k0 x + b sin(2 pi x + phi))) with k0 + 2 pi b <= 20.
 * Every function carries relative energy below 1e-12 beyond |xi| = 256 (|k| > 40).
 */
std::vector<CorpusEntry> standard_corpus(int dim, std::uint64_t seed = kCorpusSeed);

/// Periodized Gaussian bumps of width 0.03..0.12; half centred at the origin, half shifted.
std::vector<CorpusEntry> smooth_bump_corpus(int dim, std::uint64_t seed = kCorpusSeed + 1);

std::vector<GridFunction> sample_corpus(const std::vector<CorpusEntry>& corpus, const Grid& grid);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
double uniform01(std::uint64_t bits) noexcept;

}  // namespace varspace
