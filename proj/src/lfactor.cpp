#include "hb/lfactor.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hb/errors.hpp"

namespace hb {

namespace {

// Godfrey's g = 607/128, 15-term Lanczos series.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

// sin(πx), cos(πx) with the argument reduced exactly before multiplying by π.
void sincospi(double x, double& s, double& c)
{
    double r = x - 2.0 * std::round(x / 2.0);
    double sign = 1.0;
    if (r > 0.5) {
        r = 1.0 - r;
        sign = -1.0;
    } else if (r < -0.5) {
        r = -1.0 - r;
        sign = -1.0;
    }
    s = std::sin(std::numbers::pi * r);
    c = sign * std::cos(std::numbers::pi * r);
}

Complex sin_pi(Complex z)
{
    double s, c;
    sincospi(z.real(), s, c);
    const double y = std::numbers::pi * z.imag();
    return {s * std::cosh(y), c * std::sinh(y)};
}

// log Γ(z) for Re z ≥ 0.5.
Complex log_gamma_right(Complex z)
{
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) x += kLanczos[k] / (z + static_cast<double>(k));
    const Complex t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

Complex checked_exp(Complex w, const char* what)
{
    if (w.real() > 709.0) throw OverflowError(std::string(what) + ": result exceeds double range");
    Complex r = std::exp(w);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw OverflowError(std::string(what) + ": non-finite result");
    return r;
}

}  // namespace

Complex complex_gamma(Complex z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("gamma: non-finite argument");
    if (z.real() < 0.5) {
        const double n = std::round(z.real());
        if (n <= 0.0 && std::abs(z - Complex(n, 0.0)) < 1e-12)
            throw PoleError("gamma: pole at " + std::to_string(static_cast<long long>(n)));
        // Γ(z) = π / (sin(πz) Γ(1-z))
        const Complex lg = log_gamma_right(1.0 - z);
        const Complex sp = sin_pi(z);
        const Complex log_val = std::log(std::numbers::pi / sp) - lg;
        return checked_exp(log_val, "gamma");
    }
    return checked_exp(log_gamma_right(z), "gamma");
}

std::vector<Complex> l_factor_terms(const LFactorParams& p)
{
    if (p.ell < 0) throw std::invalid_argument("l_factor: ell must be non-negative");
    if (p.gamma.size() != static_cast<std::size_t>(p.ell) + 1)
        throw std::invalid_argument("l_factor: gamma needs ell+1 = " + std::to_string(p.ell + 1) +
                                    " entries, got " + std::to_string(p.gamma.size()));
    if (!(p.c > 0.0) || !std::isfinite(p.c)) throw std::invalid_argument("l_factor: c must be positive");

    const Complex I(0.0, 1.0);
    std::vector<Complex> out;
    out.reserve(p.gamma.size());
    for (const Complex& g : p.gamma) {
        const Complex w = 0.5 * (p.s - I * g);
        const Complex gw = complex_gamma(w);  // poles are reported before the domain check
        if (!(w.real() > 0.0))
            throw std::invalid_argument("l_factor: Re(s - i*gamma) must be positive");
        out.push_back(checked_exp(w * std::log(2.0 * p.c), "l_factor") * gw);
    }
    return out;
}

Complex l_factor(const LFactorParams& p)
{
    Complex prod = 1.0;
    for (const Complex& t : l_factor_terms(p)) prod *= t;
    if (!std::isfinite(prod.real()) || !std::isfinite(prod.imag()))
        throw OverflowError("l_factor: non-finite product");
    return prod;
}

Complex l_factor_canonical(int ell, const std::vector<Complex>& gamma, Complex s)
{
    return l_factor({ell, gamma, s, 1.0 / (2.0 * std::numbers::pi)});
}

}  // namespace hb
