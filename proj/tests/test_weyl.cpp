#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hb/weyl.hpp"

using namespace hb;

namespace {

// Random operator with small integer coefficients, degree ≤ 2 in x and ∂.
WeylOp random_op(int dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3), slot(0, dim * dim - 1), deg(0, 1), cpow(-1, 1);
    WeylOp op(dim);
    for (int t = 0; t < 4; ++t) {
        WeylMonomial m(static_cast<std::size_t>(dim) * dim);
        for (int r = 0; r < 2; ++r) {
            m.xdeg[slot(rng)] += deg(rng);
            m.ddeg[slot(rng)] += deg(rng);
        }
        const GaussianRational v{Rational(coeff(rng)), Rational(coeff(rng))};
        if (!v.is_zero()) op.add_term(m, CoeffPoly(v, cpow(rng)));
    }
    return op;
}

Polynomial random_poly(int dim, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-4, 4), slot(0, dim * dim - 1);
    Polynomial p(dim);
    for (int t = 0; t < 3; ++t) {
        Polynomial::Exponent e(static_cast<std::size_t>(dim) * dim, 0);
        for (int r = 0; r < 3; ++r) e[slot(rng)] += 1;
        p.add_term(e, CoeffPoly(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical commutation relation")
{
    for (int dim = 1; dim <= 2; ++dim)
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j)
                for (int k = 1; k <= dim; ++k)
                    for (int l = 1; l <= dim; ++l) {
                        const WeylOp b = op_bracket(WeylOp::d(dim, i, j), WeylOp::x(dim, k, l));
                        const bool same = i == k && j == l;
                        CHECK(b == (same ? WeylOp::scalar(dim, CoeffPoly(1)) : WeylOp(dim)));
                    }
}

TEST_CASE("normal ordering of d*x")
{
    const WeylOp p = WeylOp::d(1, 1, 1) * WeylOp::x(1, 1, 1);
    CHECK(p.to_string() == "x11*d11 + (1)");
    const WeylOp q = WeylOp::d(1, 1, 1) * WeylOp::d(1, 1, 1) * WeylOp::x(1, 1, 1) * WeylOp::x(1, 1, 1);
    CHECK(q.to_string() == "x11^2*d11^2 + (4)*x11*d11 + (2)");
}

TEST_CASE("coefficient text")
{
    CHECK(CoeffPoly(GaussianRational{Rational(1, 2)}).to_string() == "1/2");
    CHECK((CoeffPoly(2) * CoeffPoly::c()).to_string() == "2*c");
    CHECK((-CoeffPoly::i() * CoeffPoly::c(-1)).to_string() == "-i*c^-1");
    CHECK(CoeffPoly().is_zero());
    CHECK((CoeffPoly::c() - CoeffPoly::c()).is_zero());
}

TEST_CASE("operator text")
{
    WeylOp a = -(WeylOp::x(2, 1, 2) * WeylOp::d(2, 1, 1)) + WeylOp::scalar(2, CoeffPoly(GaussianRational{Rational(1, 2)}));
    CHECK(a.to_string() == "-x12*d11 + (1/2)");
    CHECK(WeylOp(2).to_string() == "0");
    CHECK((CoeffPoly(2) * CoeffPoly::c() * WeylOp::d(2, 1, 1)).to_string() == "(2*c)*d11");
}

TEST_CASE("product is associative on random operators")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 1 + trial % 2;
        const WeylOp a = random_op(dim, rng), b = random_op(dim, rng), c = random_op(dim, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("product agrees with composition on polynomials")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 1 + trial % 2;
        const WeylOp a = random_op(dim, rng), b = random_op(dim, rng);
        const Polynomial p = random_poly(dim, rng);
        CHECK(op_apply_to_poly(op_mul(a, b), p) == op_apply_to_poly(a, op_apply_to_poly(b, p)));
    }
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + trial % 2;
        const WeylOp a = random_op(dim, rng), b = random_op(dim, rng), c = random_op(dim, rng);
        CHECK(op_bracket(a, b) == -op_bracket(b, a));
        const WeylOp j = op_bracket(op_bracket(a, b), c) + op_bracket(op_bracket(b, c), a) +
                         op_bracket(op_bracket(c, a), b);
        CHECK(j.is_zero());
    }
}

TEST_CASE("formal adjoint")
{
    const int dim = 2;
    CHECK(op_formal_adjoint(WeylOp::x(dim, 1, 2)) == WeylOp::x(dim, 1, 2));
    CHECK(op_formal_adjoint(WeylOp::d(dim, 1, 2)) == -WeylOp::d(dim, 1, 2));
    // (x∂)† = -∂x = -x∂ - 1
    const WeylOp xd = WeylOp::x(dim, 1, 1) * WeylOp::d(dim, 1, 1);
    CHECK(op_formal_adjoint(xd) == -xd - WeylOp::scalar(dim, CoeffPoly(1)));
    // no complex conjugation of coefficients
    const WeylOp ix = CoeffPoly::i() * WeylOp::x(dim, 1, 1);
    CHECK(op_formal_adjoint(ix) == ix);

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 20; ++trial) {
        const WeylOp a = random_op(dim, rng), b = random_op(dim, rng);
        CHECK(op_formal_adjoint(op_formal_adjoint(a)) == a);
        CHECK(op_formal_adjoint(a * b) == op_formal_adjoint(b) * op_formal_adjoint(a));
    }
}

TEST_CASE("gaussian conjugation")
{
    const int dim = 2;
    const WeylOp d = WeylOp::d(dim, 2, 1);
    const WeylOp expect = d - CoeffPoly::c(-1) * WeylOp::x(dim, 2, 1);
    CHECK(gaussian_conjugate(d) == expect);
    CHECK(gaussian_conjugate(d, false) == d - WeylOp::x(dim, 2, 1));
    // X - iY with X = ix, Y = -c∂ conjugates to ic∂, which kills 1
    const WeylOp x = CoeffPoly::i() * WeylOp::x(dim, 1, 1);
    const WeylOp y = -(CoeffPoly::c() * WeylOp::d(dim, 1, 1));
    const WeylOp t = gaussian_conjugate(x - CoeffPoly::i() * y);
    CHECK(op_apply_to_poly(t, Polynomial::constant(dim, CoeffPoly(1))).is_zero());

    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        const WeylOp a = random_op(dim, rng), b = random_op(dim, rng);
        CHECK(gaussian_conjugate(a * b) == gaussian_conjugate(a) * gaussian_conjugate(b));
    }
}

TEST_CASE("monomials and evaluation")
{
    CHECK(test_monomials(1, 3).size() == 4);
    CHECK(test_monomials(2, 2).size() == 15);  // C(4+2, 2)
    Polynomial::Exponent e{1, 1, 0, 2};        // x11 x12 x22²
    CHECK(eval_at_identity(Polynomial::monomial(2, e)).is_zero());
    Polynomial::Exponent f{3, 0, 0, 2};
    CHECK(eval_at_identity(Polynomial::monomial(2, f, CoeffPoly(5))) == CoeffPoly(5));
    CHECK(slot_name(2, 1) == "x12");
    CHECK(slot_name(3, 5, "d") == "d23");
}

TEST_CASE("dimension mismatch is rejected")
{
    CHECK_THROWS(WeylOp::x(2, 1, 1) * WeylOp::x(3, 1, 1));
    CHECK_THROWS(WeylOp::x(2, 3, 1));
}
