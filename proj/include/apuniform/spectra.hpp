#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "apuniform/signal.hpp"

namespace apu {

/// a x^2 + b x + c over Z_n.
struct QuadraticPoly {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  /// Exact residue of q(x) mod n using 128-bit intermediates.
  std::int64_t eval(std::int64_t x, const Modulus& m) const noexcept {
    const __int128 xx = m.reduce(x);
    const __int128 value = (static_cast<__int128>(m.reduce(a)) * xx % m.n()) * xx +
                           static_cast<__int128>(m.reduce(b)) * xx + m.reduce(c);
    return m.reduce(value);
  }
};

/// omega^k with omega = exp(2 pi i / n); k is reduced mod n first.
std::complex<double> root_of_unity(const Modulus& m, std::int64_t k) noexcept;

/// Mean-normalized Fourier coefficients: coeffs[r] = E_x f(x) omega^{-r x}.
class Spectrum {
 public:
  Spectrum(Modulus m, Eigen::VectorXcd coeffs);

  const Modulus& modulus() const noexcept { return modulus_; }
  std::int64_t size() const noexcept { return modulus_.n(); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  std::complex<double> operator[](std::int64_t r) const { return coeffs_[modulus_.reduce(r)]; }

 private:
  Modulus modulus_;
  Eigen::VectorXcd coeffs_;
};

/// Direct O(n^2) evaluation of the definition.
Spectrum dft_naive(const ComplexSignal& s);

/// Naive below n = 512, chirp-z (Bluestein) convolution above.
Spectrum dft(const ComplexSignal& s);

template <typename Scalar>
Spectrum dft(const ZnSignal<Scalar>& s) {
  return dft(s.template cast<std::complex<double>>());
}

/// f(x) = sum_r coeffs[r] omega^{r x}.
ComplexSignal inverse_dft(const Spectrum& sp);

/// max over r != 0 of |coeffs[r]|.
double uniformity(const Spectrum& sp) noexcept;

/// max over all r, including r = 0.
double max_coefficient(const Spectrum& sp) noexcept;

/// n^{-1/2} ln n, the scale of every uniformity bound in the construction.
double log_scale(const Modulus& m) noexcept;

/// Geometric-sum ceiling on an interval indicator's coefficient: 2 / (n |1 - omega^r|).
double interval_coeff_bound(const Modulus& m, std::int64_t r);

/// omega^{q(x)}.
ComplexSignal quadratic_phase(const Modulus& m, const QuadraticPoly& q);

struct UniformityCheck {
  double measured = 0.0;
  double bound = 0.0;
  bool holds() const noexcept { return measured <= bound; }
};

/// Largest coefficient (r = 0 included) of I(x) omega^{q(x)} against 2 n^{-1/2} ln n.
/// Throws Error{DegenerateQuadratic} when a = 0 mod n.
UniformityCheck modulated_interval_uniformity_check(const Modulus& m, const IntervalZn& interval,
                                                    const QuadraticPoly& q);

/// CSV with header "r,re,im,abs" and 17 significant digits.
void write_spectrum_csv(const Spectrum& sp, std::ostream& out);
std::string spectrum_to_csv(const Spectrum& sp);

}  // namespace apu
