#pragma once

// Exact Weyl-algebra arithmetic: polynomial differential operators in the
// (ℓ+1)² matrix variables x_ij, normal ordered (all x before all ∂), with
// coefficients that are Laurent polynomials in a formal parameter c over
// the Gaussian rationals.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hb/rational.hpp"

namespace hb {

/// Laurent polynomial in the formal symbol c. Zero coefficients are never stored.
class CoeffPoly {
public:
    CoeffPoly() = default;
    CoeffPoly(GaussianRational value, int c_power = 0);
    CoeffPoly(std::int64_t value) : CoeffPoly(GaussianRational{value}) {}

    /// The monomial c^power with unit coefficient.
    static CoeffPoly c(int power = 1) { return CoeffPoly(GaussianRational{1}, power); }
    static CoeffPoly i() { return CoeffPoly(GaussianRational::i()); }

    const std::map<int, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CoeffPoly operator-() const;
    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const CoeffPoly& o);

    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(CoeffPoly a, const CoeffPoly& b) { return a *= b; }
    friend bool operator==(const CoeffPoly&, const CoeffPoly&) = default;

    std::complex<double> evaluate(double c) const;
    std::string to_string() const;

private:
    void add_term(int power, const GaussianRational& v);

    std::map<int, GaussianRational> terms_;
};

/// x^xdeg ∂^ddeg over the (ℓ+1)² slots; slot of x_ij is (i-1)(ℓ+1)+(j-1).
struct WeylMonomial {
    std::vector<std::uint8_t> xdeg;
    std::vector<std::uint8_t> ddeg;

    explicit WeylMonomial(std::size_t slots = 0) : xdeg(slots, 0), ddeg(slots, 0) {}

    int total_x_degree() const;
    int total_d_degree() const;

    friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Normal-ordered polynomial differential operator in canonical form: two
/// operators are equal iff their term maps are identical.
class WeylOp {
public:
    using TermMap = std::map<WeylMonomial, CoeffPoly>;

    explicit WeylOp(int dim);

    static WeylOp scalar(int dim, const CoeffPoly& value);
    /// Multiplication by x_ij (1-based indices).
    static WeylOp x(int dim, int i, int j);
    /// ∂/∂x_ij (1-based indices).
    static WeylOp d(int dim, int i, int j);

    int dim() const { return dim_; }
    std::size_t slots() const { return static_cast<std::size_t>(dim_) * dim_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True for the zero operator and for pure multiples of the identity.
    bool is_scalar() const;
    /// Coefficient of the identity monomial.
    CoeffPoly scalar_part() const;

    void add_term(const WeylMonomial& m, const CoeffPoly& coeff);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    WeylOp& operator*=(const CoeffPoly& s);

    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
    friend WeylOp operator*(WeylOp a, const CoeffPoly& s) { return a *= s; }
    friend WeylOp operator*(const CoeffPoly& s, WeylOp a) { return a *= s; }
    friend bool operator==(const WeylOp&, const WeylOp&) = default;

    /// Canonical text, e.g. "-x12*d11 + (-1/2)" ; "0" for the zero operator.
    std::string to_string() const;

private:
    int dim_;
    TermMap terms_;
};

WeylOp op_add(const WeylOp& a, const WeylOp& b);
WeylOp op_mul(const WeylOp& a, const WeylOp& b);
/// [a, b] = ab - ba.
WeylOp op_bracket(const WeylOp& a, const WeylOp& b);

/// Transpose with respect to ∫ f·g dx: x ↦ x, ∂ ↦ -∂, order reversed.
/// Coefficients are not complex conjugated.
WeylOp op_formal_adjoint(const WeylOp& a);

/// e^{+Tr(xᵀx)/2c} ∘ a ∘ e^{-Tr(xᵀx)/2c}, i.e. ∂_ij ↦ ∂_ij - c⁻¹x_ij.
/// With c_is_formal = false the Gaussian width is fixed to c = 1.
WeylOp gaussian_conjugate(const WeylOp& a, bool c_is_formal = true);

/// Polynomial in the x-variables with CoeffPoly coefficients.
class Polynomial {
public:
    using Exponent = std::vector<std::uint8_t>;
    using TermMap = std::map<Exponent, CoeffPoly>;

    explicit Polynomial(int dim);
    static Polynomial constant(int dim, const CoeffPoly& value);
    static Polynomial monomial(int dim, const Exponent& exponent, const CoeffPoly& coeff = CoeffPoly(1));

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    void add_term(const Exponent& e, const CoeffPoly& coeff);
    Polynomial& operator+=(const Polynomial& o);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const;

private:
    int dim_;
    TermMap terms_;
};

Polynomial op_apply_to_poly(const WeylOp& a, const Polynomial& p);

/// Substitutes x_ij = δ_ij.
CoeffPoly eval_at_identity(const Polynomial& p);

/// Every monic monomial in the x-variables of total degree ≤ max_degree.
std::vector<Polynomial> test_monomials(int dim, int max_degree);

/// Name of slot s as "x12" (or with a different prefix).
std::string slot_name(int dim, std::size_t slot, const char* prefix = "x");

}  // namespace hb
