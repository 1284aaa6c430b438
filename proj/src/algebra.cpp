#include "hb/algebra.hpp"

#include "hb/errors.hpp"

#include <stdexcept>
#include <utility>

namespace hb {

// --------------------------------------------------------------- GeneratorId

GeneratorId GeneratorId::make(GenTag tag, int i, int j)
{
    GeneratorId g{tag, i, j};
    if (tag == GenTag::C) {
        g.i = g.j = 0;
    } else if (g.symmetric() && g.i > g.j) {
        std::swap(g.i, g.j);
    }
    return g;
}

bool GeneratorId::symmetric() const
{
    return tag == GenTag::BL || tag == GenTag::BR || tag == GenTag::CL || tag == GenTag::CR;
}

std::string GeneratorId::to_string() const
{
    const char* name = "C";
    switch (tag) {
    case GenTag::X: name = "X"; break;
    case GenTag::Y: name = "Y"; break;
    case GenTag::C: return "C";
    case GenTag::EL: name = "EL"; break;
    case GenTag::ER: name = "ER"; break;
    case GenTag::AL: name = "AL"; break;
    case GenTag::AR: name = "AR"; break;
    case GenTag::BL: name = "BL"; break;
    case GenTag::BR: name = "BR"; break;
    case GenTag::CL: name = "CcL"; break;
    case GenTag::CR: name = "CcR"; break;
    }
    return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// --------------------------------------------------------- LinearCombination

LinearCombination& LinearCombination::add(GeneratorId g, const CoeffPoly& coeff)
{
    auto [it, inserted] = terms.try_emplace(g, coeff);
    if (!inserted) it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
    return *this;
}

LinearCombination& LinearCombination::add_central(const CoeffPoly& v)
{
    central += v;
    return *this;
}

std::string LinearCombination::to_string() const
{
    std::string out;
    auto append = [&](const std::string& coeff, const std::string& sym) {
        std::string t;
        if (sym.empty())
            t = "(" + coeff + ")";
        else if (coeff == "1")
            t = sym;
        else if (coeff == "-1")
            t = "-" + sym;
        else
            t = "(" + coeff + ")*" + sym;
        if (!out.empty()) out += " + ";
        out += t;
    };
    for (const auto& [g, c] : terms) append(c.to_string(), g.to_string());
    if (!central.is_zero()) append(central.to_string(), "");
    return out.empty() ? "0" : out;
}

RelationEntry* RelationTable::find(GeneratorId a, GeneratorId b)
{
    for (auto& e : entries)
        if (e.lhs1 == a && e.lhs2 == b) return &e;
    return nullptr;
}

// --------------------------------------------------------------- Realization

void Realization::set(GeneratorId g, WeylOp op)
{
    if (op.dim() != dim()) throw DimensionError("realization: operator size does not match ell");
    auto [it, inserted] = ops_.insert_or_assign(g, std::move(op));
    (void)it;
    if (inserted) basis_.push_back(g);
}

const WeylOp& Realization::at(GeneratorId g) const
{
    auto it = ops_.find(g);
    if (it == ops_.end()) throw std::out_of_range("realization: no generator " + g.to_string());
    return it->second;
}

WeylOp Realization::realize(const LinearCombination& lc) const
{
    WeylOp out = WeylOp::scalar(dim(), lc.central);
    for (const auto& [g, c] : lc.terms) out += at(g) * c;
    return out;
}

// ---------------------------------------------------------------- verifiers

Residual make_residual(const std::string& relation, const WeylOp& value)
{
    return {relation, value.to_string(), value.is_scalar()};
}

VerificationReport verify_relations(const Realization& real, const RelationTable& table, const std::string& task)
{
    if (real.ell() != table.ell) throw std::invalid_argument("verify_relations: ell mismatch");
    VerificationReport rep;
    rep.task = task;
    rep.params["ell"] = real.ell();
    rep.params["entries"] = table.entries.size();
    for (const auto& e : table.entries) {
        WeylOp r = op_bracket(real.at(e.lhs1), real.at(e.lhs2)) - real.realize(e.rhs);
        ++rep.checks;
        if (!r.is_zero()) {
            std::string rel = "[" + e.lhs1.to_string() + "," + e.lhs2.to_string() + "] = " + e.rhs.to_string();
            rep.residuals.push_back(make_residual(rel, r));
        }
    }
    return rep;
}

VerificationReport verify_jacobi(const Realization& real)
{
    VerificationReport rep;
    rep.task = "jacobi";
    rep.params["ell"] = real.ell();
    const auto& basis = real.basis();
    const std::size_t n = basis.size();
    rep.params["basis_size"] = n;

    std::vector<std::vector<WeylOp>> br(n);
    for (std::size_t a = 0; a < n; ++a) {
        br[a].reserve(n);
        for (std::size_t b = 0; b < n; ++b)
            br[a].push_back(b > a ? op_bracket(real.at(basis[a]), real.at(basis[b])) : WeylOp(real.dim()));
    }
    auto bracket = [&](std::size_t a, std::size_t b) { return a < b ? br[a][b] : -br[b][a]; };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                const WeylOp& A = real.at(basis[a]);
                const WeylOp& B = real.at(basis[b]);
                const WeylOp& Cop = real.at(basis[c]);
                WeylOp j = op_bracket(bracket(a, b), Cop) + op_bracket(bracket(b, c), A) +
                           op_bracket(bracket(c, a), B);
                ++rep.checks;
                if (!j.is_zero())
                    rep.residuals.push_back(make_residual("jacobi(" + basis[a].to_string() + "," +
                                                              basis[b].to_string() + "," + basis[c].to_string() + ")",
                                                          j));
            }
    return rep;
}

bool in_span(const WeylOp& target, const std::vector<WeylOp>& basis, int c_range)
{
    const int width = 2 * c_range + 1;
    const std::size_t ncols = basis.size() * static_cast<std::size_t>(width);

    // one row per (monomial, power of c)
    std::map<std::pair<WeylMonomial, int>, std::size_t> row_of;
    std::vector<std::vector<GaussianRational>> rows;
    auto row = [&](const WeylMonomial& m, int p) -> std::vector<GaussianRational>& {
        auto [it, inserted] = row_of.try_emplace({m, p}, rows.size());
        if (inserted) rows.emplace_back(ncols + 1);
        return rows[it->second];
    };
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].dim() != target.dim()) throw DimensionError("in_span: dimension mismatch");
        for (const auto& [m, coeff] : basis[k].terms())
            for (const auto& [p, v] : coeff.terms())
                for (int d = -c_range; d <= c_range; ++d)
                    row(m, p + d)[k * static_cast<std::size_t>(width) + static_cast<std::size_t>(d + c_range)] += v;
    }
    for (const auto& [m, coeff] : target.terms())
        for (const auto& [p, v] : coeff.terms()) row(m, p)[ncols] += v;

    // forward elimination
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        std::size_t r = pivot_row;
        while (r < rows.size() && rows[r][col].is_zero()) ++r;
        if (r == rows.size()) continue;
        std::swap(rows[r], rows[pivot_row]);
        const GaussianRational inv = GaussianRational{1} / rows[pivot_row][col];
        for (std::size_t q = col; q <= ncols; ++q)
            if (!rows[pivot_row][q].is_zero()) rows[pivot_row][q] *= inv;
        for (std::size_t other = pivot_row + 1; other < rows.size(); ++other) {
            if (rows[other][col].is_zero()) continue;
            const GaussianRational f = rows[other][col];
            for (std::size_t q = col; q <= ncols; ++q)
                if (!rows[pivot_row][q].is_zero()) rows[other][q] -= f * rows[pivot_row][q];
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows.size(); ++r)
        if (!rows[r][ncols].is_zero()) return false;
    return true;
}

VerificationReport check_gaussian_annihilation(const std::string& task, const std::vector<NamedOp>& ops)
{
    VerificationReport rep;
    rep.task = task;
    for (const auto& [name, op] : ops) {
        Polynomial one = Polynomial::constant(op.dim(), CoeffPoly(1));
        Polynomial out = op_apply_to_poly(gaussian_conjugate(op), one);
        ++rep.checks;
        if (!out.is_zero()) rep.residuals.push_back({name + " applied to exp(-Tr(x^T x)/2c)", out.to_string(), out.is_constant()});
    }
    return rep;
}

VerificationReport check_delta_equations(const std::string& task, int dim, const std::vector<NamedOp>& ops,
                                         int max_degree)
{
    if (max_degree < 0) throw std::invalid_argument("check_delta_equations: negative degree");
    VerificationReport rep;
    rep.task = task;
    const auto tests = test_monomials(dim, max_degree);
    for (const auto& [name, op] : ops) {
        const WeylOp adj = op_formal_adjoint(op);
        std::size_t failures = 0;
        std::string first;
        CoeffPoly first_value;
        for (const auto& p : tests) {
            ++rep.checks;
            CoeffPoly v = eval_at_identity(op_apply_to_poly(adj, p));
            if (!v.is_zero()) {
                if (failures == 0) {
                    first = p.to_string();
                    first_value = v;
                }
                ++failures;
            }
        }
        if (failures > 0)
            rep.residuals.push_back({name + " on delta(x-Id), first failing test monomial " + first + " (" +
                                         std::to_string(failures) + " of " + std::to_string(tests.size()) + " fail)",
                                     first_value.to_string(), false});
    }
    return rep;
}

}  // namespace hb
