#include "wigprop/transforms.hpp"

#include <fftw3.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace wigprop {

namespace {

std::atomic<int> g_threads{1};

using PlanKey = std::tuple<std::size_t, std::size_t, int, int, int>;

// fftw_plan_* is not thread-safe; fftw_execute_* on an existing plan is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t rows, std::size_t cols, int axis, Direction dir,
                int threads) {
    const PlanKey key{rows, cols, axis, static_cast<int>(dir), threads};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    std::call_once(threads_init_, [] { fftw_init_threads(); });
    fftw_plan_with_nthreads(threads);

    const std::size_t total = rows * cols;
    auto* scratch = fftw_alloc_complex(total);
    if (scratch == nullptr) throw std::bad_alloc();

    const int n = static_cast<int>(axis == 0 ? rows : cols);
    const int howmany = static_cast<int>(axis == 0 ? cols : rows);
    const int stride = static_cast<int>(axis == 0 ? cols : 1);
    const int dist = static_cast<int>(axis == 0 ? 1 : cols);
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;

    // FFTW_ESTIMATE keeps the algorithm choice deterministic across runs.
    fftw_plan plan =
        fftw_plan_many_dft(1, &n, howmany, scratch, nullptr, stride, dist,
                           scratch, nullptr, stride, dist, sign,
                           FFTW_ESTIMATE);
    fftw_free(scratch);
    if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::once_flag threads_init_;
  std::map<PlanKey, fftw_plan> plans_;
};

Representation after_transform(Representation rep, int axis, Direction dir) {
  const bool lambda = rep == Representation::LambdaTheta ||
                      rep == Representation::LambdaP;
  const bool theta = rep == Representation::XTheta ||
                     rep == Representation::LambdaTheta;
  bool new_lambda = lambda;
  bool new_theta = theta;
  if (axis == 0) {
    if (dir == Direction::Forward ? lambda : !lambda) {
      throw std::logic_error(std::string("axis 0 transform invalid from ") +
                             std::string(to_string(rep)));
    }
    new_lambda = !lambda;
  } else {
    if (dir == Direction::Forward ? theta : !theta) {
      throw std::logic_error(std::string("axis 1 transform invalid from ") +
                             std::string(to_string(rep)));
    }
    new_theta = !theta;
  }
  if (new_lambda) {
    return new_theta ? Representation::LambdaTheta : Representation::LambdaP;
  }
  return new_theta ? Representation::XTheta : Representation::XP;
}

}  // namespace

void set_transform_threads(int threads) {
  g_threads.store(std::max(threads, 1));
}

int transform_threads() { return g_threads.load(); }

void dft_axis(std::span<Complex> data, std::size_t rows, std::size_t cols,
              int axis, Direction dir) {
  if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
  if (data.size() != rows * cols) {
    throw std::invalid_argument("dft_axis: buffer size does not match shape");
  }
  if (data.empty()) return;

  fftw_plan plan =
      PlanCache::instance().get(rows, cols, axis, dir, transform_threads());
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  if (fftw_alignment_of(reinterpret_cast<double*>(raw)) == 0) {
    fftw_execute_dft(plan, raw, raw);
  } else {
    ComplexBuffer aligned(data.begin(), data.end());
    auto* tmp = reinterpret_cast<fftw_complex*>(aligned.data());
    fftw_execute_dft(plan, tmp, tmp);
    std::copy(aligned.begin(), aligned.end(), data.begin());
  }

  if (dir == Direction::Inverse) {
    const double scale = 1.0 / static_cast<double>(axis == 0 ? rows : cols);
    for (auto& v : data) v *= scale;
  }
}

void transform_axis(Field& f, int axis, Direction dir) {
  const Representation next = after_transform(f.rep(), axis, dir);
  dft_axis(f.data(), f.rows(), f.cols(), axis, dir);
  f.set_rep(next);
}

Field xp_to_xtheta(Field f) {
  f.require(Representation::XP, "xp_to_xtheta");
  transform_axis(f, 1, Direction::Forward);
  return f;
}

Field xtheta_to_xp(Field f) {
  f.require(Representation::XTheta, "xtheta_to_xp");
  transform_axis(f, 1, Direction::Inverse);
  return f;
}

Field xtheta_to_lambdap(Field f) {
  f.require(Representation::XTheta, "xtheta_to_lambdap");
  transform_axis(f, 0, Direction::Forward);
  transform_axis(f, 1, Direction::Inverse);
  return f;
}

Field lambdap_to_xtheta(Field f) {
  f.require(Representation::LambdaP, "lambdap_to_xtheta");
  transform_axis(f, 1, Direction::Forward);
  transform_axis(f, 0, Direction::Inverse);
  return f;
}

Field xtheta_to_lambdatheta(Field f) {
  f.require(Representation::XTheta, "xtheta_to_lambdatheta");
  transform_axis(f, 0, Direction::Forward);
  return f;
}

Field lambdatheta_to_xtheta(Field f) {
  f.require(Representation::LambdaTheta, "lambdatheta_to_xtheta");
  transform_axis(f, 0, Direction::Inverse);
  return f;
}

Field lambdap_to_xp(Field f) {
  f.require(Representation::LambdaP, "lambdap_to_xp");
  transform_axis(f, 0, Direction::Inverse);
  return f;
}

Field xp_to_lambdap(Field f) {
  f.require(Representation::XP, "xp_to_lambdap");
  transform_axis(f, 0, Direction::Forward);
  return f;
}

}  // namespace wigprop
