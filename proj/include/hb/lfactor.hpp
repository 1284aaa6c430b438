#pragma once

#include <complex>
#include <vector>

namespace hb {

using Complex = std::complex<double>;

/// Γ(z) for complex z, relative error about 1e-13 for |z| ≤ 20.
/// Throws PoleError within 1e-12 of a non-positive integer and
/// OverflowError when the result leaves the double range.
Complex complex_gamma(Complex z);

struct LFactorParams {
    int ell = 0;
    std::vector<Complex> gamma;  // ell+1 entries
    Complex s;
    double c = 0.5;
};

/// Individual factors (2c)^{w_j} Γ(w_j), w_j = (s - iγ_j)/2.
std::vector<Complex> l_factor_terms(const LFactorParams& p);

/// L(s;c) = ∏_j (2c)^{(s-iγ_j)/2} Γ((s-iγ_j)/2).
Complex l_factor(const LFactorParams& p);

/// l_factor on the section 2c = 1/π.
Complex l_factor_canonical(int ell, const std::vector<Complex>& gamma, Complex s);

}  // namespace hb
