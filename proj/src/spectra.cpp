#include "apuniform/spectra.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "apuniform/parallel.hpp"

namespace apu {
namespace {

using cd = std::complex<double>;

constexpr std::int64_t kNaiveCutoff = 512;

/// omega^k for k in [0, n).
std::vector<cd> root_table(const Modulus& m) {
  const std::int64_t n = m.n();
  std::vector<cd> table(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    table[k] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

/// In-place iterative radix-2 FFT, length a power of two. sign = -1 forward, +1 inverse
/// (unscaled).
void fft_pow2(std::vector<cd>& a, int sign) {
  const std::size_t len = a.size();
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  // Twiddles from exact angles, one table for every stage.
  std::vector<cd> twiddle(len / 2);
  for (std::size_t k = 0; k < len / 2; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(len);
    twiddle[k] = {std::cos(angle), sign * std::sin(angle)};
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    const std::size_t stride = len / (2 * half);
    for (std::size_t start = 0; start < len; start += 2 * half) {
      for (std::size_t k = 0; k < half; ++k) {
        const cd u = a[start + k];
        const cd v = a[start + k + half] * twiddle[k * stride];
        a[start + k] = u + v;
        a[start + k + half] = u - v;
      }
    }
  }
}

Eigen::VectorXcd bluestein(const ComplexSignal& s) {
  const std::int64_t n = s.size();
  // chirp[k] = exp(-pi i k^2 / n), with k^2 reduced mod 2n for an exact argument.
  std::vector<cd> chirp(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    const auto sq = static_cast<std::int64_t>(static_cast<__int128>(k) * k % (2 * n));
    const double angle = std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n);
    chirp[k] = {std::cos(angle), -std::sin(angle)};
  }
  std::size_t len = 1;
  while (len < static_cast<std::size_t>(2 * n - 1)) len <<= 1;

  std::vector<cd> a(len, cd{});
  std::vector<cd> b(len, cd{});
  for (std::int64_t k = 0; k < n; ++k) a[k] = s[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::int64_t k = 1; k < n; ++k) b[k] = b[len - k] = std::conj(chirp[k]);

  fft_pow2(a, -1);
  fft_pow2(b, -1);
  for (std::size_t i = 0; i < len; ++i) a[i] *= b[i];
  fft_pow2(a, +1);

  Eigen::VectorXcd out(n);
  const double scale = 1.0 / (static_cast<double>(len) * static_cast<double>(n));
  for (std::int64_t r = 0; r < n; ++r) out[r] = chirp[r] * a[r] * scale;
  return out;
}

}  // namespace

std::complex<double> root_of_unity(const Modulus& m, std::int64_t k) noexcept {
  const double angle =
      2.0 * std::numbers::pi * static_cast<double>(m.reduce(k)) / static_cast<double>(m.n());
  return {std::cos(angle), std::sin(angle)};
}

Spectrum::Spectrum(Modulus m, Eigen::VectorXcd coeffs) : modulus_(m), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != m.n()) {
    throw Error(Errc::LengthMismatch, "spectrum length differs from modulus");
  }
}

Spectrum dft_naive(const ComplexSignal& s) {
  const Modulus& m = s.modulus();
  const std::int64_t n = m.n();
  const std::vector<cd> table = root_table(m);
  Eigen::VectorXcd out(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t ri) {
    const auto r = static_cast<std::int64_t>(ri);
    cd acc{};
    std::int64_t phase = 0;  // r * x mod n
    for (std::int64_t x = 0; x < n; ++x) {
      acc += s[x] * table[phase == 0 ? 0 : n - phase];
      phase += r;
      if (phase >= n) phase -= n;
    }
    out[r] = acc / static_cast<double>(n);
  });
  return Spectrum(m, std::move(out));
}

Spectrum dft(const ComplexSignal& s) {
  if (s.size() < kNaiveCutoff) return dft_naive(s);
  return Spectrum(s.modulus(), bluestein(s));
}

ComplexSignal inverse_dft(const Spectrum& sp) {
  // f(x) = n * conj(E_r conj(c_r) omega^{-r x}), reusing the forward transform.
  const Modulus& m = sp.modulus();
  const ComplexSignal conj_coeffs(m, sp.coeffs().conjugate());
  const Spectrum back = dft(conj_coeffs);
  return ComplexSignal(m, back.coeffs().conjugate() * static_cast<double>(m.n()));
}

double uniformity(const Spectrum& sp) noexcept {
  double best = 0.0;
  for (std::int64_t r = 1; r < sp.size(); ++r) best = std::max(best, std::abs(sp.coeffs()[r]));
  return best;
}

double max_coefficient(const Spectrum& sp) noexcept {
  return std::max(std::abs(sp.coeffs()[0]), uniformity(sp));
}

double log_scale(const Modulus& m) noexcept {
  const auto n = static_cast<double>(m.n());
  return std::log(n) / std::sqrt(n);
}

double interval_coeff_bound(const Modulus& m, std::int64_t r) {
  const std::int64_t k = m.reduce(r);
  if (k == 0) throw Error(Errc::ZeroFrequency, "interval coefficient bound needs r != 0");
  // |1 - omega^r| = 2 sin(pi r / n)
  const double chord =
      2.0 * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(m.n()));
  return 2.0 / (static_cast<double>(m.n()) * chord);
}

ComplexSignal quadratic_phase(const Modulus& m, const QuadraticPoly& q) {
  ComplexSignal::Vector values(m.n());
  for (std::int64_t x = 0; x < m.n(); ++x) values[x] = root_of_unity(m, q.eval(x, m));
  return ComplexSignal(m, std::move(values));
}

UniformityCheck modulated_interval_uniformity_check(const Modulus& m, const IntervalZn& interval,
                                                    const QuadraticPoly& q) {
  if (m.reduce(q.a) == 0) {
    throw Error(Errc::DegenerateQuadratic, "leading coefficient vanishes mod n");
  }
  validate_interval(interval, m);
  ComplexSignal::Vector values = ComplexSignal::Vector::Zero(m.n());
  for (std::int64_t i = 0; i < interval.length; ++i) {
    const std::int64_t x = m.reduce(interval.start + i);
    values[x] = root_of_unity(m, q.eval(x, m));
  }
  const Spectrum sp = dft(ComplexSignal(m, std::move(values)));
  return {max_coefficient(sp), 2.0 * log_scale(m)};
}

void write_spectrum_csv(const Spectrum& sp, std::ostream& out) {
  const auto old_precision = out.precision(17);
  out << "r,re,im,abs\n";
  for (std::int64_t r = 0; r < sp.size(); ++r) {
    const cd c = sp.coeffs()[r];
    out << r << ',' << c.real() << ',' << c.imag() << ',' << std::abs(c) << '\n';
  }
  out.precision(old_precision);
}

std::string spectrum_to_csv(const Spectrum& sp) {
  std::ostringstream out;
  write_spectrum_csv(sp, out);
  return out.str();
}

}  // namespace apu
