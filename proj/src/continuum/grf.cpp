#include "hperc/continuum/grf.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>

#include <fftw3.h>
#include <fmt/format.h>

#include "hperc/continuum/poisson.hpp"
#include "hperc/core/rng.hpp"
#include "hperc/site/cubical.hpp"

namespace hperc {

namespace {

constexpr double kSpectrumTolerance = 1e-10;

// The FFTW planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class Transform {
 public:
  Transform(int d, int g, int sign) : size_(1) {
    std::vector<int> dims(static_cast<std::size_t>(d), g);
    for (int i = 0; i < d; ++i) size_ *= static_cast<std::size_t>(g);
    buffer_ = fftw_alloc_complex(size_);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft(d, dims.data(), buffer_, buffer_, sign, FFTW_ESTIMATE);
  }
  ~Transform() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
    fftw_free(buffer_);
  }
  Transform(const Transform&) = delete;
  Transform& operator=(const Transform&) = delete;

  std::complex<double>* data() { return reinterpret_cast<std::complex<double>*>(buffer_); }
  std::size_t size() const { return size_; }
  void execute() { fftw_execute(plan_); }

 private:
  std::size_t size_;
  fftw_complex* buffer_ = nullptr;
  fftw_plan plan_ = nullptr;
};

}  // namespace

GrfField sample_grf_torus(int d, int g, double sigma2, std::uint64_t seed) {
  if (d < 1 || d > 4) throw Error(ErrorCode::UnsupportedDimension, fmt::format("GRF needs d in [1, 4], got {}", d));
  if (g < 3) throw Error(ErrorCode::SizeTooSmall, fmt::format("grid size {} < 3", g));
  if (!(sigma2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma2 must be positive");

  Transform forward(d, g, FFTW_FORWARD);
  Transform backward(d, g, FFTW_BACKWARD);
  const std::size_t n = forward.size();
  const auto ug = static_cast<std::size_t>(g);

  // Wrapped kernel C(0, x) on the grid; the circulant's eigenvalues are its DFT.
  auto* k = forward.data();
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rest = idx;
    double dist2 = 0.0;
    for (int a = 0; a < d; ++a) {
      const std::size_t j = rest % ug;
      rest /= ug;
      const double w = static_cast<double>(std::min(j, ug - j)) / g;
      dist2 += w * w;
    }
    k[idx] = std::exp(-dist2 / sigma2);
  }
  forward.execute();
  std::vector<double> root(n);
  double variance = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double lambda = k[i].real();
    if (lambda < -kSpectrumTolerance) {
      throw Error(ErrorCode::SpectrumNotPSD,
                  fmt::format("kernel eigenvalue {} at sigma2 = {} on a {}-grid", lambda, sigma2, g));
    }
    lambda = std::max(lambda, 0.0);
    variance += lambda;
    root[i] = std::sqrt(lambda);
  }
  variance /= static_cast<double>(n);

  // FFT of white noise is Hermitian-symmetric complex Gaussian noise.
  Rng rng(seed);
  std::normal_distribution<double> normal;
  auto* z = forward.data();
  for (std::size_t i = 0; i < n; ++i) z[i] = normal(rng);
  forward.execute();
  auto* out = backward.data();
  for (std::size_t i = 0; i < n; ++i) out[i] = z[i] * root[i];
  backward.execute();

  GrfField f;
  f.d = d;
  f.g = g;
  f.sigma2 = sigma2;
  f.seed = seed;
  f.values.resize(n);
  const double scale = 1.0 / (static_cast<double>(n) * std::sqrt(variance));
  for (std::size_t i = 0; i < n; ++i) f.values[i] = out[i].real() * scale;
  return f;
}

FilteredComplex sublevel_cubical_filtration(const GrfField& f) {
  const CubicalGrid grid(f.d, f.g);
  if (f.values.size() != grid.sites()) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("field has {} values, grid needs {}", f.values.size(), grid.sites()));
  }
  ModelMeta meta{ModelKind::Grf, f.g, f.seed, SiteRule::None};
  FilteredComplex c(f.d, ParamKind::Level, meta);
  c.reserve(grid.cells(), grid.cells() * static_cast<std::size_t>(f.d));
  for (CellId id = 0; id < grid.cells(); ++id) {
    double v = -std::numeric_limits<double>::infinity();
    for (std::size_t s : grid.vertices(id)) v = std::max(v, f.values[s]);
    c.add_cell(std::popcount(grid.mask_of(id)), v, grid.boundary(id));
  }
  return c;
}

double hermite(int k, double x) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "Hermite degree must be non-negative");
  // k! / (j! (k-2j)! 2^j) built incrementally from the j = 0 term.
  double coeff = 1.0;
  double sum = 0.0;
  for (int j = 0; 2 * j <= k; ++j) {
    if (j > 0) coeff *= -static_cast<double>((k - 2 * j + 2) * (k - 2 * j + 1)) / (2.0 * j);
    sum += coeff * std::pow(x, k - 2 * j);
  }
  return sum;
}

double expected_ec_grf(int d, double alpha) {
  if (d < 1) throw Error(ErrorCode::UnsupportedDimension, fmt::format("d = {}", d));
  const double lk = 2.0 / unit_ball_volume(d);
  return lk * std::pow(2.0 * std::numbers::pi, -(d + 1) / 2.0) * hermite(d - 1, -alpha) *
         std::exp(-alpha * alpha / 2.0);
}

void write_field_csv(std::ostream& os, const GrfField& f) {
  os << "d,g,sigma2,seed\n";
  os << fmt::format("{},{},{:.17g},{}\n", f.d, f.g, f.sigma2, f.seed);
  const auto g = static_cast<std::size_t>(f.g);
  std::string line;
  for (std::size_t row = 0; row * g < f.values.size(); ++row) {
    line.clear();
    for (std::size_t i = 0; i < g; ++i) {
      line += fmt::format("{}{:.17g}", i == 0 ? "" : ",", f.values[row * g + i]);
    }
    os << line << '\n';
  }
}

}  // namespace hperc
