#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hb/lfactor.hpp"
#include "hb/matrix.hpp"
#include "hb/mc.hpp"

namespace hb {

struct IwasawaParts {
    Mat n;                  // lower unipotent
    std::vector<double> a;  // positive diagonal
    Mat k;                  // orthogonal
};

/// g = n·diag(a)·k, from the lower Cholesky factor of g·gᵀ (obtained as the
/// transposed R of a Householder QR of gᵀ).
IwasawaParts iwasawa_lower(const GroupMatrix& g);

/// Only the diagonal a(m) of the decomposition, for use inside sampling loops.
void iwasawa_diagonal(const Mat& m, double* a);

/// Haar-distributed element of O(ell+1): QR of a Gaussian matrix with the
/// signs of R's diagonal moved into Q.
Mat haar_orthogonal(int n, std::mt19937_64& rng);
GroupMatrix haar_orthogonal_sample(int ell, std::mt19937_64& rng);

struct SpectralParams {
    std::vector<Complex> gamma;
    Complex s = 1.0;
    double c = 1.0;
    double kappa = 0.0;
};

enum class RhoSign { minus, plus };

/// ∏_j a_j(m)^{iγ_j ∓ ρ_j}, ρ_j = ℓ/2 + 1 - j.
Complex spherical_character(const std::vector<Complex>& gamma, const Mat& m, RhoSign sign = RhoSign::minus);

/// Φ_γ(g) = ∫_{O(ℓ+1)} ∏_j a_j(kg)^{iγ_j-ρ_j} dk by Monte Carlo. Exact
/// (zero error, no sampling) when g is orthogonal or ℓ = 0.
Estimate spherical_function(const std::vector<Complex>& gamma, const GroupMatrix& g, const MCConfig& cfg,
                            RhoSign sign = RhoSign::minus);

/// Q_{s,c}(g) = |det g|^{s+ℓ/2} exp(-Tr(gᵀg)/2c).
Complex hb_kernel(const SpectralParams& p, const GroupMatrix& g);

/// Φ_γ(h)·|det h|^{(ℓ+1)/2}·exp(-Tr(hᵀh)/2c) with h = g1⁻¹g2.
Estimate whittaker_hgl(const std::vector<Complex>& gamma, double c, const GroupMatrix& g1, const GroupMatrix& g2,
                       const MCConfig& cfg);

/// Same matrix element for the one-dimensional representation |det|^{iκ}:
/// |det h|^{iκ+(ℓ+1)/2}·exp(-Tr(hᵀh)/2c), h = g1⁻¹g2.
Complex whittaker_one_dim(double kappa, double c, const GroupMatrix& g1, const GroupMatrix& g2);

/// Kernel recovered as the one-dimensional matrix element at (Id, g).
Complex hb_kernel_from_theorem(double kappa, double c, int ell, const GroupMatrix& g);

/// 2∫₀^∞ y^{s-iγ-1} e^{-y²/2c} dy by adaptive Gauss-Kronrod on y = e^t.
Complex gl1_eigenvalue_quadrature(double gamma, Complex s, double c);

/// ∫ Q_{s,c}(y) Φ_γ(g y⁻¹) |det y|^{-(ℓ+1)} dy over GL(ℓ+1,ℝ), Lebesgue
/// measure on the entries, y sampled from N(0, c) entrywise.
Estimate hb_eigenvalue_mc(const std::vector<Complex>& gamma, Complex s, double c, const GroupMatrix& g,
                          const MCConfig& cfg);

struct HaarConstant {
    double value = 0.0;
    double std_error = 0.0;
    Estimate raw;  // the γ = 0, g = Id integral
};

/// N_ℓ = hb_eigenvalue_mc(γ = 0, g = Id) / ∏_j L(s,c;0).
HaarConstant calibrate_haar_constant(int ell, Complex s, double c, const MCConfig& cfg);

/// Sample-stream identifiers: one per estimator, so one seed feeds all.
namespace stream {
inline constexpr std::uint64_t spherical = 1;
inline constexpr std::uint64_t eigen = 2;
inline constexpr std::uint64_t calibrate = 3;
inline constexpr std::uint64_t whittaker = 4;
}  // namespace stream

}  // namespace hb
