#include "cgolab/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace cgolab {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// FFTW plan registry. Plans are created once per (dim, samples, sign) with
// FFTW_ESTIMATE (deterministic choice) and FFTW_UNALIGNED, then reused via
// the new-array interface, which is safe to execute concurrently.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  fftw_plan get(int dim, int samples, int sign) {
    std::scoped_lock lock(mu_);
    auto key = std::make_tuple(dim, samples, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<int> n(dim, samples);
    std::size_t total = ipow(samples, dim);
    std::vector<cplx> a(total), b(total);
    fftw_plan p = fftw_plan_dft(dim, n.data(),
                                reinterpret_cast<fftw_complex*>(a.data()),
                                reinterpret_cast<fftw_complex*>(b.data()), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

}  // namespace

namespace detail {
void raw_fft(int dim, int samples, const cplx* in, cplx* out, int sign) {
  fftw_plan p = PlanCache::instance().get(dim, samples, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}
}  // namespace detail

PeriodicGrid::PeriodicGrid(int dim, int samples, double length)
    : dim_(dim), samples_(samples), length_(length) {
  if (dim < 2) throw std::invalid_argument("grid: dimension must be >= 2");
  if (!power_of_two(samples) || samples < 8)
    throw std::invalid_argument("grid: samples per axis must be a power of two >= 8");
  if (!(length > 0.0)) throw std::invalid_argument("grid: box length must be positive");
  cell_ = 2.0 * std::numbers::pi / length;
  num_points_ = ipow(samples, dim);
}

double PeriodicGrid::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim_; ++i) v *= length_;
  return v;
}

int PeriodicGrid::freq_int(std::size_t index, int axis) const {
  std::size_t stride = 1;
  for (int a = dim_ - 1; a > axis; --a) stride *= samples_;
  int i = static_cast<int>((index / stride) % samples_);
  return i < samples_ / 2 ? i : i - samples_;
}

void PeriodicGrid::frequency(std::size_t index, double* out) const {
  std::size_t rest = index;
  for (int a = dim_ - 1; a >= 0; --a) {
    int i = static_cast<int>(rest % samples_);
    rest /= samples_;
    out[a] = cell_ * (i < samples_ / 2 ? i : i - samples_);
  }
}

std::int64_t PeriodicGrid::freq_int_sq(std::size_t index) const {
  std::int64_t s = 0;
  std::size_t rest = index;
  for (int a = dim_ - 1; a >= 0; --a) {
    int i = static_cast<int>(rest % samples_);
    rest /= samples_;
    std::int64_t m = i < samples_ / 2 ? i : i - samples_;
    s += m * m;
  }
  return s;
}

void PeriodicGrid::point(std::size_t index, double* out) const {
  std::size_t rest = index;
  double dx = spacing();
  for (int a = dim_ - 1; a >= 0; --a) {
    out[a] = dx * static_cast<double>(rest % samples_);
    rest /= samples_;
  }
}

std::size_t PeriodicGrid::index_of_freq(std::span<const int> m) const {
  if (static_cast<int>(m.size()) != dim_)
    throw std::invalid_argument("index_of_freq: wrong dimension");
  std::size_t idx = 0;
  for (int a = 0; a < dim_; ++a) {
    int c = m[a];
    if (c < -samples_ / 2 || c >= samples_ / 2)
      throw std::invalid_argument("index_of_freq: component outside lattice");
    int i = c >= 0 ? c : c + samples_;
    idx = idx * samples_ + i;
  }
  return idx;
}

Field::Field(const PeriodicGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  if (values.size() != g.num_points())
    throw std::invalid_argument("field: value count must equal N^n");
}

SpectralField::SpectralField(const PeriodicGrid& g, std::vector<cplx> c)
    : grid(g), coeffs(std::move(c)) {
  if (coeffs.size() != g.num_points())
    throw std::invalid_argument("spectral field: coefficient count must equal N^n");
}

SpectralField forward_transform(const Field& f) {
  SpectralField out(f.grid);
  detail::raw_fft(f.grid.dim(), f.grid.samples(), f.values.data(), out.coeffs.data(), -1);
  double scale = 1.0 / static_cast<double>(f.grid.num_points());
  for (auto& c : out.coeffs) c *= scale;
  return out;
}

Field inverse_transform(const SpectralField& g) {
  Field out(g.grid);
  detail::raw_fft(g.grid.dim(), g.grid.samples(), g.coeffs.data(), out.values.data(), +1);
  return out;
}

double lp_norm(const Field& f, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : f.values) s += std::pow(std::abs(v), p);
  int n = f.grid.dim();
  double h = std::pow(f.grid.spacing(), static_cast<double>(n) / p);
  return h * std::pow(s, 1.0 / p);
}

double spectral_l2(const SpectralField& g) {
  double s = 0.0;
  for (const auto& c : g.coeffs) s += std::norm(c);
  return std::sqrt(g.grid.volume() * s);
}

namespace {

// map coefficients between lattices with N and M samples per axis (M >= N)
void embed_axis_indices(int N, int M, std::vector<int>& map) {
  map.resize(N);
  for (int i = 0; i < N; ++i) {
    int m = i < N / 2 ? i : i - N;
    map[i] = m >= 0 ? m : m + M;
  }
}

std::vector<cplx> embed(const std::vector<cplx>& in, int dim, int N, int M) {
  std::vector<int> axmap;
  embed_axis_indices(N, M, axmap);
  std::size_t total = ipow(M, dim);
  std::vector<cplx> out(total);
  std::size_t count = ipow(N, dim);
  std::vector<int> digits(dim);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int a = dim - 1; a >= 0; --a) {
      digits[a] = static_cast<int>(rest % N);
      rest /= N;
    }
    std::size_t to = 0;
    for (int a = 0; a < dim; ++a) to = to * M + axmap[digits[a]];
    out[to] = in[idx];
  }
  return out;
}

std::vector<cplx> restrict_to(const std::vector<cplx>& in, int dim, int M, int N) {
  std::vector<int> axmap;
  embed_axis_indices(N, M, axmap);
  std::size_t count = ipow(N, dim);
  std::vector<cplx> out(count);
  std::vector<int> digits(dim);
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int a = dim - 1; a >= 0; --a) {
      digits[a] = static_cast<int>(rest % N);
      rest /= N;
    }
    std::size_t from = 0;
    for (int a = 0; a < dim; ++a) from = from * M + axmap[digits[a]];
    out[idx] = in[from];
  }
  return out;
}

}  // namespace

std::vector<cplx> pad_coeffs(const SpectralField& g, int padded_samples) {
  if (padded_samples < g.grid.samples())
    throw std::invalid_argument("pad_coeffs: padded lattice must not be smaller");
  return embed(g.coeffs, g.grid.dim(), g.grid.samples(), padded_samples);
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("dealiased_product: grid mismatch");
  int dim = f.grid.dim();
  int N = f.grid.samples();
  int M = 3 * N / 2;
  std::size_t total = ipow(M, dim);
  std::vector<cplx> fa = embed(f.coeffs, dim, N, M);
  std::vector<cplx> fb(total);
  detail::raw_fft(dim, M, fa.data(), fb.data(), +1);
  std::vector<cplx> ga = embed(g.coeffs, dim, N, M);
  std::vector<cplx> gb(total);
  detail::raw_fft(dim, M, ga.data(), gb.data(), +1);
  for (std::size_t i = 0; i < total; ++i) fb[i] *= gb[i];
  detail::raw_fft(dim, M, fb.data(), gb.data(), -1);
  double scale = 1.0 / static_cast<double>(total);
  for (auto& c : gb) c *= scale;
  return SpectralField(f.grid, restrict_to(gb, dim, M, N));
}

Field dealiased_product(const Field& f, const Field& g) {
  return inverse_transform(dealiased_product(forward_transform(f), forward_transform(g)));
}

Field pointwise_product(const Field& f, const Field& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("pointwise_product: grid mismatch");
  Field out(f.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = f.values[i] * g.values[i];
  return out;
}

SpectralField derivative(const SpectralField& g, int axis) {
  if (axis < 0 || axis >= g.grid.dim()) throw std::invalid_argument("derivative: bad axis");
  SpectralField out(g.grid);
  double d0 = g.grid.cell();
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    double xi = d0 * g.grid.freq_int(i, axis);
    out.coeffs[i] = cplx(0.0, xi) * g.coeffs[i];
  }
  return out;
}

SpectralField laplacian(const SpectralField& g) {
  SpectralField out(g.grid);
  double d0sq = g.grid.cell() * g.grid.cell();
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    out.coeffs[i] = -d0sq * static_cast<double>(g.grid.freq_int_sq(i)) * g.coeffs[i];
  }
  return out;
}

std::complex<double> coefficient(const SpectralField& g, std::span<const int> m) {
  return g.coeffs[g.grid.index_of_freq(m)];
}

}  // namespace cgolab
