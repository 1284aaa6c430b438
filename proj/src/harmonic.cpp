#include "hb/harmonic.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

#include "hb/errors.hpp"

namespace hb {

namespace {

void require_gamma_size(const std::vector<Complex>& gamma, int n)
{
    if (gamma.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("gamma needs " + std::to_string(n) + " entries, got " +
                                    std::to_string(gamma.size()));
}

void require_positive_c(double c)
{
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("c must be positive");
}

}  // namespace

// ------------------------------------------------------------------ Iwasawa

IwasawaParts iwasawa_lower(const GroupMatrix& g)
{
    const Eigen::Index n = g.size();
    Eigen::HouseholderQR<Mat> qr(g.entries().transpose());
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    Mat q = qr.householderQ();
    // gᵀ = q·r  ⇒  g = rᵀ·qᵀ; flip signs so that the diagonal of rᵀ is positive
    Mat L = r.transpose();
    Mat k = q.transpose();
    for (Eigen::Index j = 0; j < n; ++j)
        if (L(j, j) < 0) {
            L.col(j) *= -1.0;
            k.row(j) *= -1.0;
        }
    IwasawaParts parts;
    parts.a.resize(static_cast<std::size_t>(n));
    parts.n = L;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double a = L(j, j);
        if (!(a > 0.0)) throw SingularMatrixError("iwasawa: singular input");
        parts.a[static_cast<std::size_t>(j)] = a;
        parts.n.col(j) /= a;
    }
    parts.k = k;
    return parts;
}

void iwasawa_diagonal(const Mat& m, double* a)
{
    // Gram-Schmidt on the rows: a_j is the distance of row j from the span of rows 1..j-1
    const Eigen::Index n = m.rows();
    Mat q = m;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index p = 0; p < j; ++p) q.row(j) -= q.row(j).dot(q.row(p)) * q.row(p);
        const double nrm = q.row(j).norm();
        a[j] = nrm;
        if (nrm > 0.0) q.row(j) /= nrm;
    }
}

// --------------------------------------------------------------------- Haar

Mat haar_orthogonal(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    Mat z(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) z(i, j) = normal(rng);
    // modified Gram-Schmidt on the columns gives the QR factor with positive
    // diag(R); the second pass restores orthogonality for ill-conditioned draws
    for (int j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass)
            for (int p = 0; p < j; ++p) z.col(j) -= z.col(j).dot(z.col(p)) * z.col(p);
        z.col(j).normalize();
    }
    return z;
}

GroupMatrix haar_orthogonal_sample(int ell, std::mt19937_64& rng)
{
    if (ell < 0 || ell + 1 > kMaxMatrixSize) throw DimensionError("haar sample: ell out of range");
    return GroupMatrix(haar_orthogonal(ell + 1, rng));
}

// ------------------------------------------------------ spherical function

Complex spherical_character(const std::vector<Complex>& gamma, const Mat& m, RhoSign sign)
{
    const int n = static_cast<int>(m.rows());
    std::array<double, kMaxMatrixSize> a{};
    iwasawa_diagonal(m, a.data());
    const double ell = n - 1;
    const Complex I(0.0, 1.0);
    Complex expo = 0.0;
    for (int j = 0; j < n; ++j) {
        if (!(a[static_cast<std::size_t>(j)] > 0.0)) return 0.0;
        const double rho = ell / 2.0 + 1.0 - (j + 1);
        const Complex e = I * gamma[static_cast<std::size_t>(j)] + (sign == RhoSign::minus ? -rho : rho);
        expo += e * std::log(a[static_cast<std::size_t>(j)]);
    }
    return std::exp(expo);
}

Estimate spherical_function(const std::vector<Complex>& gamma, const GroupMatrix& g, const MCConfig& cfg,
                            RhoSign sign)
{
    const int n = g.size();
    require_gamma_size(gamma, n);
    if (n == 1) return {spherical_character(gamma, g.entries(), sign), 0.0, 0};
    if (g.is_orthogonal()) return {1.0, 0.0, 0};
    const Mat gm = g.entries();
    return monte_carlo(cfg, stream::spherical, [&](std::mt19937_64& rng) {
        const Mat k = haar_orthogonal(n, rng);
        return spherical_character(gamma, k * gm, sign);
    });
}

// ------------------------------------------------------------------ kernels

Complex hb_kernel(const SpectralParams& p, const GroupMatrix& g)
{
    require_positive_c(p.c);
    const double ell = g.size() - 1;
    const Complex expo = (p.s + ell / 2.0) * std::log(std::abs(g.det())) - g.trace_gram() / (2.0 * p.c);
    return std::exp(expo);
}

Complex whittaker_one_dim(double kappa, double c, const GroupMatrix& g1, const GroupMatrix& g2)
{
    require_positive_c(c);
    if (g1.size() != g2.size()) throw DimensionError("whittaker: matrix sizes differ");
    const GroupMatrix h = g1.inverse() * g2;
    const double n = h.size();
    const Complex expo = Complex(n / 2.0, kappa) * std::log(std::abs(h.det())) - h.trace_gram() / (2.0 * c);
    return std::exp(expo);
}

Complex hb_kernel_from_theorem(double kappa, double c, int ell, const GroupMatrix& g)
{
    if (g.size() != ell + 1) throw DimensionError("kernel: matrix size must be ell+1");
    return whittaker_one_dim(kappa, c, GroupMatrix::identity(ell + 1), g);
}

Estimate whittaker_hgl(const std::vector<Complex>& gamma, double c, const GroupMatrix& g1, const GroupMatrix& g2,
                       const MCConfig& cfg)
{
    require_positive_c(c);
    if (g1.size() != g2.size()) throw DimensionError("whittaker: matrix sizes differ");
    const GroupMatrix h = g1.inverse() * g2;
    const double n = h.size();
    const double factor = std::pow(std::abs(h.det()), n / 2.0) * std::exp(-h.trace_gram() / (2.0 * c));
    MCConfig sub = cfg;
    Estimate phi;
    if (h.size() == 1 || h.is_orthogonal()) {
        phi = spherical_function(gamma, h, cfg);
    } else {
        require_gamma_size(gamma, h.size());
        const Mat hm = h.entries();
        const int dim = h.size();
        phi = monte_carlo(sub, stream::whittaker, [&](std::mt19937_64& rng) {
            return spherical_character(gamma, haar_orthogonal(dim, rng) * hm);
        });
    }
    return {phi.value * factor, phi.std_error * factor, phi.samples};
}

// ------------------------------------------------------ GL(1) quadrature

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                       0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    Complex value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gauss_kronrod(F&& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const Complex fc = f(center);
    Complex kronrod = fc * kWgk[7];
    Complex gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const Complex sum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * sum;
        if (j % 2 == 1) gauss += kWg[j / 2] * sum;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Complex gl1_eigenvalue_quadrature(double gamma, Complex s, double c)
{
    require_positive_c(c);
    if (!(s.real() > 0.0)) throw ConvergenceError("gl1 quadrature diverges for Re(s) <= 0");
    const Complex w = s - Complex(0.0, gamma);
    const double rw = w.real();
    const double two_c = 2.0 * c;

    // log-magnitude of the integrand 2·exp(w t - e^{2t}/2c) peaks at e^{2t} = c·Re w
    auto logmag = [&](double t) { return std::log(2.0) + rw * t - std::exp(2.0 * t) / two_c; };
    const double t_peak = 0.5 * std::log(c * rw);
    const double log_peak = logmag(t_peak);
    // left tail ∫_{-∞}^{t} 2e^{Re w·u} du = 2e^{Re w·t}/Re w, pushed 40 e-folds below the peak
    const double t_lo = std::min(t_peak - 1.0, (log_peak - 40.0 + std::log(rw / 2.0)) / rw);
    double t_hi = t_peak + 1.0;
    while (logmag(t_hi) > log_peak - 45.0) t_hi += 0.25;

    auto f = [&](double t) { return 2.0 * std::exp(w * t - std::exp(2.0 * t) / two_c); };

    std::priority_queue<Segment> heap;
    Complex total = 0.0;
    double err = 0.0;
    const int initial = 16;
    for (int k = 0; k < initial; ++k) {
        const double a = t_lo + (t_hi - t_lo) * k / initial;
        const double b = t_lo + (t_hi - t_lo) * (k + 1) / initial;
        Segment seg = gauss_kronrod(f, a, b);
        total += seg.value;
        err += seg.error;
        heap.push(seg);
    }
    const double floor = 1e-15 * std::exp(log_peak);
    int iterations = 0;
    while (err > std::max(1e-13 * std::abs(total), floor)) {
        if (++iterations > 5000) break;
        Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gauss_kronrod(f, worst.a, mid);
        Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // recompute the sum to avoid drift from the incremental updates
    total = 0.0;
    err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    if (err > 1e-10 * std::abs(total) && err > floor) throw ConvergenceError("gl1 quadrature did not converge");
    return total;
}

// ------------------------------------------------------ eigenvalue by MC

namespace {

Estimate eigen_mc(const std::vector<Complex>& gamma, Complex s, double c, const GroupMatrix& g, const MCConfig& cfg,
                  std::uint64_t stream_id)
{
    require_positive_c(c);
    const int n = g.size();
    const int ell = n - 1;
    require_gamma_size(gamma, n);
    if (!(s.real() > ell))
        throw ConvergenceError("eigenvalue integral needs Re(s) > ell = " + std::to_string(ell));

    const double sd = std::sqrt(c);
    const double log_norm = 0.5 * n * n * std::log(2.0 * std::numbers::pi * c);
    const Complex det_power = s + ell / 2.0 - static_cast<double>(n);
    const Mat gm = g.entries();

    return monte_carlo(cfg, stream_id, [&](std::mt19937_64& rng) -> Complex {
        std::normal_distribution<double> normal(0.0, sd);
        Mat y(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) y(i, j) = normal(rng);
        const Mat k = haar_orthogonal(n, rng);
        Eigen::PartialPivLU<Mat> lu(y);
        const double det = lu.determinant();
        if (det == 0.0 || !std::isfinite(det)) return 0.0;
        const Mat h = gm * lu.inverse();
        const Complex phi = spherical_character(gamma, k * h);
        return std::exp(log_norm + det_power * std::log(std::abs(det))) * phi;
    });
}

}  // namespace

Estimate hb_eigenvalue_mc(const std::vector<Complex>& gamma, Complex s, double c, const GroupMatrix& g,
                          const MCConfig& cfg)
{
    return eigen_mc(gamma, s, c, g, cfg, stream::eigen);
}

HaarConstant calibrate_haar_constant(int ell, Complex s, double c, const MCConfig& cfg)
{
    if (ell < 0 || ell + 1 > kMaxMatrixSize) throw DimensionError("calibration: ell out of range");
    const std::vector<Complex> zero(static_cast<std::size_t>(ell) + 1, 0.0);
    HaarConstant h;
    h.raw = eigen_mc(zero, s, c, GroupMatrix::identity(ell + 1), cfg, stream::calibrate);
    const Complex ref = l_factor({ell, zero, s, c});
    h.value = (h.raw.value / ref).real();
    h.std_error = h.raw.std_error / std::abs(ref);
    return h;
}

}  // namespace hb
