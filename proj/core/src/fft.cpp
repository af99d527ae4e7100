#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace varspace::detail {
namespace {

// fftw planning is not thread-safe, execution with new arrays is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const Grid& grid, int sign) {
    const auto key = std::make_tuple(grid.dim(), grid.n(), sign);
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::vector<Complex> scratch(grid.size());
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int n = static_cast<int>(grid.n());
    fftw_plan plan = grid.dim() == 1 ? fftw_plan_dft_1d(n, buf, buf, sign, flags)
                                     : fftw_plan_dft_2d(n, n, buf, buf, sign, flags);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(const Grid& grid, std::vector<Complex>& data, int sign) {
  fftw_plan plan = cache().get(grid, sign);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

void fft_forward(const Grid& grid, std::vector<Complex>& data) { execute(grid, data, FFTW_FORWARD); }

void fft_backward(const Grid& grid, std::vector<Complex>& data) { execute(grid, data, FFTW_BACKWARD); }

}  // namespace varspace::detail
