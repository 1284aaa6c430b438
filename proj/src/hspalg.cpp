#include "hb/hspalg.hpp"

#include <optional>
#include <string>

#include "hb/errors.hpp"
#include "hb/hglalg.hpp"

namespace hb {

namespace {

GeneratorId gen(GenTag t, int i = 0, int j = 0)
{
    return GeneratorId::make(t, i, j);
}

std::string idx(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_rank(int ell)
{
    if (ell < 0) throw std::invalid_argument("ell must be non-negative");
    if (ell > kMaxHspEll)
        throw RankError("hsp: ell = " + std::to_string(ell) + " exceeds the supported maximum " +
                        std::to_string(kMaxHspEll));
}

enum class Kind { heis, a, b, c };
enum class Side { none, left, right };

Kind kind(GenTag t)
{
    switch (t) {
    case GenTag::AL:
    case GenTag::AR:
    case GenTag::EL:
    case GenTag::ER: return Kind::a;
    case GenTag::BL:
    case GenTag::BR: return Kind::b;
    case GenTag::CL:
    case GenTag::CR: return Kind::c;
    default: return Kind::heis;
    }
}

Side side(GenTag t)
{
    switch (t) {
    case GenTag::AL:
    case GenTag::BL:
    case GenTag::CL: return Side::left;
    case GenTag::AR:
    case GenTag::BR:
    case GenTag::CR: return Side::right;
    default: return Side::none;
    }
}

GenTag tag_of(Kind k, Side s)
{
    const bool L = s == Side::left;
    switch (k) {
    case Kind::a: return L ? GenTag::AL : GenTag::AR;
    case Kind::b: return L ? GenTag::BL : GenTag::BR;
    case Kind::c: return L ? GenTag::CL : GenTag::CR;
    default: return GenTag::C;
    }
}

bool d(int a, int b)
{
    return a == b;
}

LinearCombination negated(LinearCombination r)
{
    for (auto& [g, c] : r.terms) c = -c;
    r.central = -r.central;
    return r;
}

GeneratorId to_hgl(GeneratorId g)
{
    if (g.tag == GenTag::AL) g.tag = GenTag::EL;
    if (g.tag == GenTag::AR) g.tag = GenTag::ER;
    return g;
}

LinearCombination from_hgl(const LinearCombination& lc)
{
    LinearCombination out;
    out.central = lc.central;
    for (const auto& [g0, c] : lc.terms) {
        GeneratorId g = g0;
        if (g.tag == GenTag::EL) g.tag = GenTag::AL;
        if (g.tag == GenTag::ER) g.tag = GenTag::AR;
        out.add(g, c);
    }
    return out;
}

// Right side of [g1,g2] where a formula is written with g1 first; nullopt if
// this ordering has no direct formula.
std::optional<LinearCombination> direct(GeneratorId g1, GeneratorId g2, int sign_r)
{
    const Kind k1 = kind(g1.tag), k2 = kind(g2.tag);
    const Side s1 = side(g1.tag);
    const int i = g1.i, j = g1.j, k = g2.i, l = g2.j;
    LinearCombination r;

    if ((k1 == Kind::heis && (k2 == Kind::heis || k2 == Kind::a)) || (k1 == Kind::a && k2 == Kind::heis) || (k1 == Kind::a && k2 == Kind::a && s1 != side(g2.tag)))
        return from_hgl(hgl_expected_bracket(to_hgl(g1), to_hgl(g2)));

    if (k2 == Kind::heis) {
        const bool is_c = g2.tag == GenTag::C;
        if (is_c) return r;
        const bool x = g2.tag == GenTag::X;
        if (g1.tag == GenTag::BL && x) {
            if (d(j, k)) r.add(gen(GenTag::Y, i, l), 1);
            if (d(i, k)) r.add(gen(GenTag::Y, j, l), 1);
        } else if (g1.tag == GenTag::CL && !x) {
            if (d(j, k)) r.add(gen(GenTag::X, i, l), 1);
            if (d(i, k)) r.add(gen(GenTag::X, j, l), 1);
        } else if (g1.tag == GenTag::BR && !x) {
            if (d(i, l)) r.add(gen(GenTag::X, k, j), sign_r);
            if (d(j, l)) r.add(gen(GenTag::X, k, i), sign_r);
        } else if (g1.tag == GenTag::CR && x) {
            if (d(i, l)) r.add(gen(GenTag::Y, k, j), sign_r);
            if (d(j, l)) r.add(gen(GenTag::Y, k, i), sign_r);
        }
        return r;
    }

    if (s1 != side(g2.tag)) return std::nullopt;
    const Side s = s1;
    if (k1 == Kind::a && k2 == Kind::a) {
        if (d(j, k)) r.add(gen(tag_of(Kind::a, s), i, l), 1);
        if (d(i, l)) r.add(gen(tag_of(Kind::a, s), k, j), -1);
        return r;
    }
    if ((k1 == Kind::b && k2 == Kind::b) || (k1 == Kind::c && k2 == Kind::c)) return r;
    if (k1 == Kind::b && k2 == Kind::c) {
        const GenTag a = tag_of(Kind::a, s);
        if (d(i, k)) r.add(gen(a, j, l), 1);
        if (d(j, l)) r.add(gen(a, i, k), 1);
        if (d(j, k)) r.add(gen(a, i, l), 1);
        if (d(i, l)) r.add(gen(a, j, k), 1);
        return r;
    }
    if (k1 == Kind::a && k2 == Kind::b) {
        const GenTag b = tag_of(Kind::b, s);
        if (d(j, k)) r.add(gen(b, i, l), 1);
        if (d(j, l)) r.add(gen(b, i, k), 1);
        return r;
    }
    if (k1 == Kind::a && k2 == Kind::c) {
        const GenTag c = tag_of(Kind::c, s);
        if (d(i, k)) r.add(gen(c, j, l), -1);
        if (d(i, l)) r.add(gen(c, j, k), -1);
        return r;
    }
    return std::nullopt;
}

bool cross_copy(GeneratorId a, GeneratorId b)
{
    const Side sa = side(a.tag), sb = side(b.tag);
    if (sa == Side::none || sb == Side::none || sa == sb) return false;
    return !(kind(a.tag) == Kind::a && kind(b.tag) == Kind::a);
}

std::optional<LinearCombination> sp_bracket(GeneratorId a, GeneratorId b, int sign_r)
{
    if (cross_copy(a, b)) return std::nullopt;
    if (auto r = direct(a, b, sign_r)) return r;
    if (auto r = direct(b, a, sign_r)) return negated(*r);
    return std::nullopt;
}

CoeffPoly c_inverse()
{
    return -CoeffPoly::i() * CoeffPoly::c(-1);
}

}  // namespace

Realization build_hsp_realization(int ell)
{
    check_rank(ell);
    const int n = ell + 1;
    const Realization hgl = build_hgl_realization(ell);
    const CoeffPoly ic = CoeffPoly::i() * CoeffPoly::c();
    const CoeffPoly i_over_c = CoeffPoly::i() * CoeffPoly::c(-1);

    Realization real(ell);
    for (const auto& g : hgl.basis()) {
        GeneratorId h = g;
        if (h.tag == GenTag::EL) h.tag = GenTag::AL;
        if (h.tag == GenTag::ER) h.tag = GenTag::AR;
        real.set(h, hgl.at(g));
    }
    auto sym = [&](GenTag t, auto&& term) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                WeylOp op(n);
                for (int k = 1; k <= n; ++k) op += term(i, j, k);
                real.set(gen(t, i, j), op);
            }
    };
    sym(GenTag::BL, [&](int i, int j, int k) { return WeylOp::d(n, i, k) * WeylOp::d(n, j, k) * ic; });
    sym(GenTag::BR, [&](int i, int j, int k) { return WeylOp::x(n, k, i) * WeylOp::x(n, k, j) * i_over_c; });
    sym(GenTag::CL, [&](int i, int j, int k) { return WeylOp::x(n, i, k) * WeylOp::x(n, j, k) * i_over_c; });
    sym(GenTag::CR, [&](int i, int j, int k) { return WeylOp::d(n, k, i) * WeylOp::d(n, k, j) * ic; });
    return real;
}

WeylOp hsp_cr_repeated_index(int ell, int i, int j)
{
    check_rank(ell);
    const int n = ell + 1;
    (void)j;
    WeylOp op(n);
    for (int k = 1; k <= n; ++k)
        op += WeylOp::d(n, k, i) * WeylOp::d(n, k, i) * (CoeffPoly::i() * CoeffPoly::c());
    return op;
}

RelationTable build_hsp_relation_table(int ell, bool printed_right_signs)
{
    check_rank(ell);
    const auto basis = build_hsp_realization(ell).basis();
    const int sign_r = printed_right_signs ? -1 : 1;
    RelationTable t;
    t.ell = ell;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (auto r = sp_bracket(basis[a], basis[b], sign_r)) t.entries.push_back({basis[a], basis[b], *r});
    return t;
}

VerificationReport verify_sp_relations(const Realization& real, const RelationTable& table)
{
    auto rep = verify_relations(real, table, "sp_relations");
    std::size_t central = 0;
    for (const auto& r : rep.residuals) central += r.central_only ? 1 : 0;
    rep.params["central_residuals"] = central;
    rep.params["noncentral_residuals"] = rep.residuals.size() - central;
    return rep;
}

VerificationReport verify_sp_cross_copy(const Realization& real)
{
    VerificationReport rep;
    rep.task = "sp_cross_copy";
    rep.params["ell"] = real.ell();
    const auto& basis = real.basis();
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) {
            if (!cross_copy(basis[a], basis[b])) continue;
            WeylOp r = op_bracket(real.at(basis[a]), real.at(basis[b]));
            ++rep.checks;
            if (!r.is_zero())
                rep.residuals.push_back(make_residual("[" + basis[a].to_string() + "," + basis[b].to_string() + "]", r));
        }
    return rep;
}

VerificationReport verify_lemma2_factorization(const Realization& real)
{
    VerificationReport rep;
    rep.task = "lemma2_factorization";
    rep.params["ell"] = real.ell();
    const int n = real.dim();
    const CoeffPoly ci = c_inverse();
    auto X = [&](int i, int j) -> const WeylOp& { return real.at(gen(GenTag::X, i, j)); };
    auto Y = [&](int i, int j) -> const WeylOp& { return real.at(gen(GenTag::Y, i, j)); };

    std::vector<GeneratorId> heis;
    for (const auto& g : real.basis())
        if (kind(g.tag) == Kind::heis) heis.push_back(g);

    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            WeylOp yy(n), xx_r(n), xx_l(n), yy_r(n);
            for (int k = 1; k <= n; ++k) {
                yy += Y(j, k) * Y(i, k);
                xx_r += X(k, i) * X(k, j);
                xx_l += X(j, k) * X(i, k);
                yy_r += Y(k, i) * Y(k, j);
            }
            const std::pair<std::string, WeylOp> hats[] = {
                {"hatBL" + idx(i, j), real.at(gen(GenTag::BL, i, j)) + yy * ci},
                {"hatBR" + idx(i, j), real.at(gen(GenTag::BR, i, j)) - xx_r * ci},
                {"hatCcL" + idx(i, j), real.at(gen(GenTag::CL, i, j)) - xx_l * ci},
                {"hatCcR" + idx(i, j), real.at(gen(GenTag::CR, i, j)) + yy_r * ci},
            };
            for (const auto& [name, hat] : hats) {
                for (const auto& h : heis) {
                    WeylOp r = op_bracket(hat, real.at(h));
                    ++rep.checks;
                    if (!r.is_zero()) rep.residuals.push_back(make_residual("[" + name + "," + h.to_string() + "] = 0", r));
                }
                ++rep.checks;
                if (!hat.is_scalar())
                    rep.residuals.push_back(make_residual(name + " is scalar", hat));
                else if (!hat.is_zero())
                    rep.notes.push_back(name + " = " + hat.to_string());
            }
        }
    return rep;
}

namespace {

struct Spanning {
    std::vector<NamedOp> compact;  // K and b - c
    std::vector<NamedOp> ideal;    // X - iY
};

Spanning spherical_span(const Realization& real)
{
    const int n = real.dim();
    Spanning s;
    for (GenTag a : {GenTag::AL, GenTag::AR}) {
        const char* name = a == GenTag::AL ? "KL" : "KR";
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                s.compact.push_back({name + idx(i, j), real.at(gen(a, i, j)) - real.at(gen(a, j, i))});
    }
    for (Side sd : {Side::left, Side::right}) {
        const char* name = sd == Side::left ? "BL-CcL" : "BR-CcR";
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                s.compact.push_back({std::string(name) + idx(i, j),
                                     real.at(gen(tag_of(Kind::b, sd), i, j)) - real.at(gen(tag_of(Kind::c, sd), i, j))});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            s.ideal.push_back({"X-iY" + idx(i, j),
                               real.at(gen(GenTag::X, i, j)) - real.at(gen(GenTag::Y, i, j)) * CoeffPoly::i()});
    return s;
}

}  // namespace

VerificationReport verify_lemma3_spherical_subalgebra(const Realization& real)
{
    VerificationReport rep;
    rep.task = "lemma3_spherical_subalgebra";
    rep.params["ell"] = real.ell();
    const int n = real.dim();
    const Spanning s = spherical_span(real);

    std::vector<NamedOp> all = s.compact;
    all.insert(all.end(), s.ideal.begin(), s.ideal.end());
    std::vector<WeylOp> k_basis;
    for (const auto& e : all) k_basis.push_back(e.op);
    k_basis.push_back(WeylOp::scalar(n, CoeffPoly(1)));
    std::vector<WeylOp> a_basis;
    for (const auto& e : s.ideal) a_basis.push_back(e.op);
    rep.params["spanning_elements"] = all.size();

    for (std::size_t p = 0; p < all.size(); ++p)
        for (std::size_t q = p + 1; q < all.size(); ++q) {
            const WeylOp br = op_bracket(all[p].op, all[q].op);
            const std::string rel = "[" + all[p].name + "," + all[q].name + "]";
            const bool p_ideal = p >= s.compact.size();
            const bool q_ideal = q >= s.compact.size();
            ++rep.checks;
            if (p_ideal && q_ideal) {
                if (!br.is_zero()) rep.residuals.push_back(make_residual(rel + " = 0", br));
            } else if (q_ideal) {
                if (!in_span(br, a_basis)) rep.residuals.push_back(make_residual(rel + " in span{X-iY}", br));
            } else if (!in_span(br, k_basis)) {
                rep.residuals.push_back(make_residual(rel + " in spherical subalgebra + center", br));
            }
        }
    return rep;
}

VerificationReport verify_hgl_embedding(const Realization& hgl_real, const Realization& hsp_real)
{
    if (hgl_real.ell() != hsp_real.ell()) throw std::invalid_argument("verify_hgl_embedding: ell mismatch");
    VerificationReport rep;
    rep.task = "hgl_embedding";
    rep.params["ell"] = hgl_real.ell();
    for (const auto& g : hgl_real.basis()) {
        GeneratorId h = g;
        if (h.tag == GenTag::EL) h.tag = GenTag::AL;
        if (h.tag == GenTag::ER) h.tag = GenTag::AR;
        ++rep.checks;
        WeylOp diff = hsp_real.at(h) - hgl_real.at(g);
        if (!diff.is_zero()) rep.residuals.push_back(make_residual(g.to_string() + " -> " + h.to_string(), diff));
    }
    return rep;
}

VerificationReport verify_sp_vectors(const Realization& real, int max_test_degree)
{
    if (max_test_degree < 2) throw std::invalid_argument("whittaker check needs test degree >= 2");
    const int n = real.dim();
    const Spanning s = spherical_span(real);
    std::vector<NamedOp> sph = s.compact;
    sph.insert(sph.end(), s.ideal.begin(), s.ideal.end());
    VerificationReport rep = check_gaussian_annihilation("sp_vectors", sph);

    std::vector<NamedOp> whit;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            whit.push_back({"X" + idx(i, j) + " - i*delta",
                            real.at(gen(GenTag::X, i, j)) - WeylOp::scalar(n, i == j ? CoeffPoly::i() : CoeffPoly())});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            whit.push_back({"AL" + idx(i, j) + " + AR", real.at(gen(GenTag::AL, i, j)) + real.at(gen(GenTag::AR, i, j))});
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            whit.push_back({"BL" + idx(i, j) + " - CcR", real.at(gen(GenTag::BL, i, j)) - real.at(gen(GenTag::CR, i, j))});
            whit.push_back({"BR" + idx(i, j) + " - CcL", real.at(gen(GenTag::BR, i, j)) - real.at(gen(GenTag::CL, i, j))});
        }
    rep.merge(check_delta_equations("sp_vectors", n, whit, max_test_degree));
    rep.params["ell"] = real.ell();
    rep.params["max_test_degree"] = max_test_degree;
    return rep;
}

}  // namespace hb
