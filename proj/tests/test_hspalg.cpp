#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hb/errors.hpp"
#include "hb/hglalg.hpp"
#include "hb/hspalg.hpp"

using namespace hb;

namespace {

GeneratorId G(GenTag t, int i = 0, int j = 0) { return GeneratorId::make(t, i, j); }

std::size_t count_central(const VerificationReport& r)
{
    std::size_t n = 0;
    for (const auto& x : r.residuals) n += x.central_only;
    return n;
}

}  // namespace

TEST_CASE("realization at rank zero")
{
    const Realization r = build_hsp_realization(0);
    CHECK(r.basis().size() == 9);
    CHECK(r.at(G(GenTag::BL, 1, 1)).to_string() == "(i*c)*d11^2");
    CHECK(r.at(G(GenTag::CL, 1, 1)).to_string() == "(i*c^-1)*x11^2");
    CHECK(r.at(G(GenTag::AL, 1, 1)).to_string() == "-x11*d11 + (-1/2)");
    CHECK(build_hsp_realization(1).basis().size() == 29);
    CHECK_THROWS_AS(build_hsp_realization(kMaxHspEll + 1), RankError);
}

TEST_CASE("symmetric labels are normalized")
{
    CHECK(G(GenTag::BL, 2, 1) == G(GenTag::BL, 1, 2));
    CHECK(G(GenTag::CR, 2, 1).to_string() == "CcR(1,2)");
    CHECK_FALSE(G(GenTag::AL, 2, 1) == G(GenTag::AL, 1, 2));
}

TEST_CASE("table entries at rank zero")
{
    RelationTable t = build_hsp_relation_table(0);
    const RelationEntry* e = t.find(G(GenTag::BL, 1, 1), G(GenTag::CL, 1, 1));
    REQUIRE(e != nullptr);
    CHECK(e->rhs.to_string() == LinearCombination(G(GenTag::AL, 1, 1), CoeffPoly(4)).to_string());
    const RelationEntry* f = t.find(G(GenTag::X, 1, 1), G(GenTag::BL, 1, 1));
    REQUIRE(f != nullptr);
    CHECK(f->rhs.to_string() == LinearCombination(G(GenTag::Y, 1, 1), CoeffPoly(-2)).to_string());
    const RelationEntry* g = t.find(G(GenTag::Y, 1, 1), G(GenTag::BL, 1, 1));
    REQUIRE(g != nullptr);
    CHECK(g->rhs.is_zero());
}

TEST_CASE("hand computation [b, c] = 4 a at rank zero")
{
    const Realization r = build_hsp_realization(0);
    const WeylOp b = op_bracket(r.at(G(GenTag::BL, 1, 1)), r.at(G(GenTag::CL, 1, 1)));
    CHECK(b == CoeffPoly(4) * r.at(G(GenTag::AL, 1, 1)));
}

TEST_CASE("relations hold with corrected signs")
{
    for (int ell = 0; ell <= 1; ++ell) {
        CAPTURE(ell);
        const VerificationReport rep = verify_sp_relations(build_hsp_realization(ell), build_hsp_relation_table(ell));
        CHECK(rep.pass());
        CHECK(rep.checks == (ell == 0 ? 28u : 322u));
    }
}

TEST_CASE("printed right-copy signs leave residuals")
{
    const VerificationReport r0 = verify_sp_relations(build_hsp_realization(0), build_hsp_relation_table(0, true));
    CHECK(r0.residuals.size() == 2);
    CHECK(count_central(r0) == 0);
    const VerificationReport r1 = verify_sp_relations(build_hsp_realization(1), build_hsp_relation_table(1, true));
    CHECK(r1.residuals.size() == 16);
}

TEST_CASE("repeated-index c^R breaks the relations")
{
    Realization r = build_hsp_realization(1);
    const VerificationReport ok = verify_sp_relations(r, build_hsp_relation_table(1));
    REQUIRE(ok.pass());
    // the diagonal entries coincide; the off-diagonal one does not
    CHECK(hsp_cr_repeated_index(1, 1, 1) == r.at(G(GenTag::CR, 1, 1)));
    r.set(G(GenTag::CR, 1, 2), hsp_cr_repeated_index(1, 1, 2));
    const VerificationReport bad = verify_sp_relations(r, build_hsp_relation_table(1));
    CHECK_FALSE(bad.pass());
    CHECK(bad.residuals.size() > 0);
}

TEST_CASE("dropping the a^L shift gives central residuals")
{
    Realization r = build_hsp_realization(0);
    r.set(G(GenTag::AL, 1, 1), -(WeylOp::x(1, 1, 1) * WeylOp::d(1, 1, 1)));
    const VerificationReport rep = verify_sp_relations(r, build_hsp_relation_table(0));
    CHECK_FALSE(rep.pass());
    CHECK(count_central(rep) > 0);
    CHECK(rep.params["central_residuals"].get<int>() > 0);
}

TEST_CASE("cross-copy brackets are not zero")
{
    const Realization r = build_hsp_realization(0);
    const WeylOp bb = op_bracket(r.at(G(GenTag::BL, 1, 1)), r.at(G(GenTag::BR, 1, 1)));
    CHECK(bb == CoeffPoly(4) * r.at(G(GenTag::AL, 1, 1)));
    CHECK(op_bracket(r.at(G(GenTag::AL, 1, 1)), r.at(G(GenTag::AR, 1, 1))).is_zero());
    const VerificationReport rep = verify_sp_cross_copy(r);
    CHECK(rep.residuals.size() == 6);
}

TEST_CASE("hatted b and c decouple from the Heisenberg part")
{
    const Realization r = build_hsp_realization(0);
    for (int ell = 0; ell <= 1; ++ell) CHECK(verify_lemma2_factorization(build_hsp_realization(ell)).pass());
    // b̂^L = ic∂² + C⁻¹Y² vanishes at rank zero
    const WeylOp cinv = WeylOp::scalar(1, -CoeffPoly::i() * CoeffPoly::c(-1));
    const WeylOp& y = r.at(G(GenTag::Y, 1, 1));
    CHECK((r.at(G(GenTag::BL, 1, 1)) + cinv * y * y).is_zero());
    const WeylOp& x = r.at(G(GenTag::X, 1, 1));
    CHECK((r.at(G(GenTag::CL, 1, 1)) - cinv * x * x).is_zero());
}

TEST_CASE("spherical subalgebra closes")
{
    for (int ell = 0; ell <= 1; ++ell) {
        const VerificationReport rep = verify_lemma3_spherical_subalgebra(build_hsp_realization(ell));
        CHECK(rep.pass());
    }
    const Realization r = build_hsp_realization(1);
    auto a = [&](int i, int j) {
        return r.at(G(GenTag::X, i, j)) - CoeffPoly::i() * r.at(G(GenTag::Y, i, j));
    };
    CHECK(op_bracket(a(1, 1), a(1, 2)).is_zero());
    const WeylOp k = r.at(G(GenTag::AL, 1, 2)) - r.at(G(GenTag::AL, 2, 1));
    CHECK(in_span(op_bracket(k, a(1, 1)), {a(1, 1), a(1, 2), a(2, 1), a(2, 2)}));
}

TEST_CASE("in_span decides membership exactly")
{
    const WeylOp x = WeylOp::x(1, 1, 1), d = WeylOp::d(1, 1, 1);
    CHECK(in_span(CoeffPoly::c() * x + CoeffPoly(3) * d, {x, d}));
    CHECK(in_span(CoeffPoly::c(-2) * x, {x}));
    CHECK_FALSE(in_span(CoeffPoly::c(3) * x, {x}));
    CHECK_FALSE(in_span(x * d, {x, d}));
    CHECK_FALSE(in_span(WeylOp::scalar(1, CoeffPoly(1)), {x}));
}

TEST_CASE("hgl embedding")
{
    for (int ell = 0; ell <= 2; ++ell)
        CHECK(verify_hgl_embedding(build_hgl_realization(ell), build_hsp_realization(ell)).pass());
    CHECK_THROWS(verify_hgl_embedding(build_hgl_realization(1), build_hsp_realization(0)));
}

TEST_CASE("Jacobi at rank zero")
{
    const VerificationReport rep = verify_jacobi(build_hsp_realization(0));
    CHECK(rep.pass());
    CHECK(rep.checks == 84);
}

TEST_CASE("lifted vector equations: regression values")
{
    // Gaussian side: b - c picks up a central shift of ∓i(ℓ+1).
    const VerificationReport r0 = verify_sp_vectors(build_hsp_realization(0));
    REQUIRE(r0.residuals.size() == 2);
    CHECK(r0.residuals[0].relation.rfind("BL-CcL(1,1)", 0) == 0);
    CHECK(r0.residuals[0].residual == "(-i)");
    CHECK(r0.residuals[1].relation.rfind("BR-CcR(1,1)", 0) == 0);
    CHECK(r0.residuals[1].residual == "(i)");

    const VerificationReport r1 = verify_sp_vectors(build_hsp_realization(1));
    std::size_t gauss = 0, delta = 0;
    for (const auto& x : r1.residuals) {
        if (x.central_only) {
            ++gauss;
            CHECK((x.residual == "(-2i)" || x.residual == "(2i)"));
        } else {
            ++delta;
        }
    }
    CHECK(gauss == 4);
    CHECK(delta == 3);
    CHECK(r1.residuals[4].relation.find("x21^2 (12 of 70 fail)") != std::string::npos);
    CHECK(r1.residuals[4].residual == "-2i*c");
}

TEST_CASE("lifted vector equations: parts that hold")
{
    const Realization r = build_hsp_realization(1);
    std::vector<NamedOp> ok;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            ok.push_back({"X-iY", r.at(G(GenTag::X, i, j)) - CoeffPoly::i() * r.at(G(GenTag::Y, i, j))});
    ok.push_back({"K", r.at(G(GenTag::AR, 1, 2)) - r.at(G(GenTag::AR, 2, 1))});
    CHECK(check_gaussian_annihilation("ok", ok).pass());

    std::vector<NamedOp> w;
    for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= 2; ++j)
            w.push_back({"BR-CcL", r.at(G(GenTag::BR, i, j)) - r.at(G(GenTag::CL, i, j))});
    CHECK(check_delta_equations("ok", 2, w, 4).pass());
}
