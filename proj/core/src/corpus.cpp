#include "varspace/corpus.hpp"

#include <cmath>
#include <random>

#include "varspace/error.hpp"

namespace varspace {

double uniform01(std::uint64_t bits) noexcept { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(rng_()); }
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform01(rng_()) * (hi - lo + 1)); }

 private:
  std::mt19937_64 rng_;
};

double gaussian_images(double t, double c, double w) {
  double s = 0.0;
  for (int m = -1; m <= 1; ++m) {
    const double u = t - c + m;
    s += std::exp(-u * u / (2.0 * w * w));
  }
  return s;
}

void require_dim(int dim) {
  if (dim != 1 && dim != 2) throw PreconditionError("corpus dimension must be 1 or 2");
}

}  // namespace

std::vector<CorpusEntry> standard_corpus(int dim, std::uint64_t seed) {
  require_dim(dim);
  Draw draw(seed);
  std::vector<CorpusEntry> out;

  for (int i = 0; i < 20; ++i) {
    struct Term {
      int k1, k2;
      double amp, phase;
    };
    std::vector<Term> terms;
    const int band = dim == 1 ? draw.integer(4, 24) : draw.integer(3, 12);
    const int count = dim == 1 ? band : 2 * band;
    for (int t = 0; t < count; ++t) {
      Term term{draw.integer(0, band), dim == 2 ? draw.integer(-band, band) : 0, 0.0, 0.0};
      term.amp = draw.uniform(0.2, 1.0);
      term.phase = draw.uniform(0.0, 2.0 * kPi);
      terms.push_back(term);
    }
    out.push_back({"bandlimited_" + std::to_string(i), [terms](const Point& x) {
                     double s = 0.0;
                     for (const auto& t : terms) s += t.amp * std::cos(2.0 * kPi * (t.k1 * x[0] + t.k2 * x[1]) + t.phase);
                     return Complex{s, 0.0};
                   }});
  }

  for (int i = 0; i < 10; ++i) {
    const double w = draw.uniform(0.03, 0.1);
    const double c1 = draw.uniform(0.0, 1.0), c2 = draw.uniform(0.0, 1.0);
    out.push_back({"gaussian_" + std::to_string(i), [=](const Point& x) {
                     double v = gaussian_images(x[0], c1, w);
                     if (dim == 2) v *= gaussian_images(x[1], c2, w);
                     return Complex{v, 0.0};
                   }});
  }

  for (int i = 0; i < 10; ++i) {
    const int k1 = dim == 1 ? draw.integer(1, 40) : draw.integer(1, 20);
    const int k2 = dim == 2 ? draw.integer(-20, 20) : 0;
    const double phase = draw.uniform(0.0, 2.0 * kPi);
    out.push_back({"mode_" + std::to_string(i), [=](const Point& x) {
                     return Complex{std::cos(2.0 * kPi * (k1 * x[0] + k2 * x[1]) + phase), 0.0};
                   }});
  }

  for (int i = 0; i < 10; ++i) {
    const int k0 = draw.integer(2, 14);
    // Instantaneous frequency k0 + 2 pi b cos(.) stays within 20; Bessel sidebands past mode 40 are below 1e-12.
    const double b = draw.uniform(0.2, (20.0 - k0) / (2.0 * kPi));
    const double phi = draw.uniform(0.0, 2.0 * kPi);
    out.push_back({"chirp_" + std::to_string(i), [=](const Point& x) {
                     const double y = dim == 2 ? x[1] : x[0];
                     return Complex{std::cos(2.0 * kPi * (k0 * x[0] + b * std::sin(2.0 * kPi * y + phi))), 0.0};
                   }});
  }
  return out;
}

std::vector<CorpusEntry> smooth_bump_corpus(int dim, std::uint64_t seed) {
  require_dim(dim);
  Draw draw(seed);
  std::vector<CorpusEntry> out;
  for (int i = 0; i < 10; ++i) {
    const double w = draw.uniform(0.03, 0.12);
    const bool centred = i < 5;
    const double c1 = centred ? 0.0 : draw.uniform(0.1, 0.9);
    const double c2 = centred ? 0.0 : draw.uniform(0.1, 0.9);
    out.push_back({"bump_" + std::to_string(i), [=](const Point& x) {
                     double v = gaussian_images(x[0], c1, w);
                     if (dim == 2) v *= gaussian_images(x[1], c2, w);
                     return Complex{v, 0.0};
                   }});
  }
  return out;
}

std::vector<GridFunction> sample_corpus(const std::vector<CorpusEntry>& corpus, const Grid& grid) {
  std::vector<GridFunction> out;
  out.reserve(corpus.size());
  for (const auto& e : corpus) out.push_back(GridFunction::from_function(grid, e.f));
  return out;
}

}  // namespace varspace
