#include "hb/hglalg.hpp"

#include <string>

#include "hb/errors.hpp"

namespace hb {

namespace {

GeneratorId gen(GenTag t, int i = 0, int j = 0)
{
    return GeneratorId::make(t, i, j);
}

void check_rank(int ell)
{
    if (ell < 0) throw std::invalid_argument("ell must be non-negative");
    if (ell > kMaxHglEll)
        throw RankError("hgl: ell = " + std::to_string(ell) + " exceeds the supported maximum " +
                        std::to_string(kMaxHglEll));
}

CoeffPoly delta(int a, int b)
{
    return a == b ? CoeffPoly(1) : CoeffPoly();
}

// [a,b] for a listed before b, following the defining relations.
LinearCombination hgl_bracket(GeneratorId a, GeneratorId b)
{
    LinearCombination r;
    const auto ta = a.tag, tb = b.tag;
    if (ta == GenTag::C || tb == GenTag::C) return r;
    if (ta == GenTag::X && tb == GenTag::Y) {
        if (a.i == b.i && a.j == b.j) r.add(gen(GenTag::C), 1);
        return r;
    }
    if ((ta == GenTag::X || ta == GenTag::Y) && (tb == GenTag::X || tb == GenTag::Y)) {
        if (ta == tb) return r;
        r = hgl_bracket(b, a);
        for (auto& [g, c] : r.terms) c = -c;
        return r;
    }
    if ((ta == GenTag::EL || ta == GenTag::ER) && ta == tb) {
        // [e_ij, e_kl] = δ_jk e_il - δ_il e_kj
        if (a.j == b.i) r.add(gen(ta, a.i, b.j), 1);
        if (a.i == b.j) r.add(gen(ta, b.i, a.j), -1);
        return r;
    }
    if ((ta == GenTag::EL || ta == GenTag::ER) && (tb == GenTag::EL || tb == GenTag::ER)) return r;
    if (ta == GenTag::X || ta == GenTag::Y) {
        r = hgl_bracket(b, a);
        for (auto& [g, c] : r.terms) c = -c;
        return r;
    }
    // a ∈ {EL, ER}, b ∈ {X, Y}
    const int i = a.i, j = a.j, k = b.i, l = b.j;
    if (ta == GenTag::EL && tb == GenTag::X) {
        if (i == k) r.add(gen(GenTag::X, j, l), -1);
    } else if (ta == GenTag::EL && tb == GenTag::Y) {
        if (j == k) r.add(gen(GenTag::Y, i, l), 1);
    } else if (ta == GenTag::ER && tb == GenTag::X) {
        if (j == l) r.add(gen(GenTag::X, k, i), 1);
    } else if (ta == GenTag::ER && tb == GenTag::Y) {
        if (i == l) r.add(gen(GenTag::Y, k, j), -1);
    }
    return r;
}

}  // namespace

LinearCombination hgl_expected_bracket(GeneratorId a, GeneratorId b)
{
    return hgl_bracket(a, b);
}

Realization build_hgl_realization(int ell)
{
    check_rank(ell);
    const int n = ell + 1;
    const CoeffPoly I = CoeffPoly::i();
    const CoeffPoly half_n(GaussianRational{Rational(n, 2)});
    Realization real(ell);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) real.set(gen(GenTag::X, i, j), WeylOp::x(n, i, j) * I);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) real.set(gen(GenTag::Y, i, j), WeylOp::d(n, i, j) * -CoeffPoly::c());
    real.set(gen(GenTag::C), WeylOp::scalar(n, I * CoeffPoly::c()));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            WeylOp op = WeylOp::scalar(n, -half_n * delta(i, j));
            for (int k = 1; k <= n; ++k) op -= WeylOp::x(n, j, k) * WeylOp::d(n, i, k);
            real.set(gen(GenTag::EL, i, j), op);
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            WeylOp op = WeylOp::scalar(n, half_n * delta(i, j));
            for (int k = 1; k <= n; ++k) op += WeylOp::x(n, k, i) * WeylOp::d(n, k, j);
            real.set(gen(GenTag::ER, i, j), op);
        }
    return real;
}

RelationTable build_hgl_relation_table(int ell)
{
    check_rank(ell);
    // generator order as in the realization
    const auto basis = build_hgl_realization(ell).basis();
    RelationTable t;
    t.ell = ell;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            t.entries.push_back({basis[a], basis[b], hgl_bracket(basis[a], basis[b])});
    return t;
}

WeylOp hgl_hat_left(const Realization& real, int i, int j)
{
    const int n = real.dim();
    const CoeffPoly c_inv = -CoeffPoly::i() * CoeffPoly::c(-1);
    WeylOp sum(n);
    for (int k = 1; k <= n; ++k) sum += real.at(gen(GenTag::X, j, k)) * real.at(gen(GenTag::Y, i, k));
    return real.at(gen(GenTag::EL, i, j)) - sum * c_inv;
}

WeylOp hgl_hat_right(const Realization& real, int i, int j)
{
    const int n = real.dim();
    const CoeffPoly c_inv = -CoeffPoly::i() * CoeffPoly::c(-1);
    WeylOp sum(n);
    for (int k = 1; k <= n; ++k) sum += real.at(gen(GenTag::X, k, i)) * real.at(gen(GenTag::Y, k, j));
    return real.at(gen(GenTag::ER, i, j)) + sum * c_inv;
}

VerificationReport verify_lemma1_factorization(const Realization& real)
{
    VerificationReport rep;
    rep.task = "lemma1_factorization";
    rep.params["ell"] = real.ell();
    const int n = real.dim();
    const CoeffPoly half_n(GaussianRational{Rational(n, 2)});

    std::vector<GeneratorId> heis;
    for (const auto& g : real.basis())
        if (g.tag == GenTag::X || g.tag == GenTag::Y || g.tag == GenTag::C) heis.push_back(g);

    for (int side = 0; side < 2; ++side)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const std::string name = std::string(side == 0 ? "hatEL(" : "hatER(") + std::to_string(i) + "," +
                                         std::to_string(j) + ")";
                const WeylOp hat = side == 0 ? hgl_hat_left(real, i, j) : hgl_hat_right(real, i, j);
                for (const auto& h : heis) {
                    WeylOp r = op_bracket(hat, real.at(h));
                    ++rep.checks;
                    if (!r.is_zero()) rep.residuals.push_back(make_residual("[" + name + "," + h.to_string() + "] = 0", r));
                }
                const CoeffPoly expected = (side == 0 ? -half_n : half_n) * delta(i, j);
                WeylOp r = hat - WeylOp::scalar(n, expected);
                ++rep.checks;
                if (!r.is_zero())
                    rep.residuals.push_back(make_residual(name + " = (" + expected.to_string() + ")", r));
            }
    return rep;
}

VerificationReport verify_spherical_vector(const Realization& real)
{
    const int n = real.dim();
    const CoeffPoly I = CoeffPoly::i();
    std::vector<NamedOp> ops;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            ops.push_back({"X(" + std::to_string(i) + "," + std::to_string(j) + ") - i*Y",
                           real.at(gen(GenTag::X, i, j)) - real.at(gen(GenTag::Y, i, j)) * I});
    for (GenTag t : {GenTag::EL, GenTag::ER})
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                ops.push_back({std::string(t == GenTag::EL ? "KL(" : "KR(") + std::to_string(i) + "," +
                                   std::to_string(j) + ")",
                               real.at(gen(t, i, j)) - real.at(gen(t, j, i))});
    auto rep = check_gaussian_annihilation("spherical_vector", ops);
    rep.params["ell"] = real.ell();
    return rep;
}

VerificationReport verify_whittaker_covector(const Realization& real, int max_test_degree)
{
    if (max_test_degree < 2) throw std::invalid_argument("whittaker check needs test degree >= 2");
    const int n = real.dim();
    std::vector<NamedOp> ops;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            ops.push_back({"X(" + std::to_string(i) + "," + std::to_string(j) + ") - i*delta",
                           real.at(gen(GenTag::X, i, j)) - WeylOp::scalar(n, CoeffPoly::i() * delta(i, j))});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            ops.push_back({"EL(" + std::to_string(i) + "," + std::to_string(j) + ") + ER",
                           real.at(gen(GenTag::EL, i, j)) + real.at(gen(GenTag::ER, i, j))});
    auto rep = check_delta_equations("whittaker_covector", n, ops, max_test_degree);
    rep.params["ell"] = real.ell();
    rep.params["max_test_degree"] = max_test_degree;
    return rep;
}

}  // namespace hb
