#include "hb/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hb/errors.hpp"

namespace hb {

// ---------------------------------------------------------------- CoeffPoly

CoeffPoly::CoeffPoly(GaussianRational value, int c_power)
{
    add_term(c_power, value);
}

void CoeffPoly::add_term(int power, const GaussianRational& v)
{
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(power, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoeffPoly CoeffPoly::operator-() const
{
    CoeffPoly r;
    for (const auto& [p, v] : terms_) r.terms_.emplace(p, -v);
    return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o)
{
    for (const auto& [p, v] : o.terms_) add_term(p, v);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o)
{
    for (const auto& [p, v] : o.terms_) add_term(p, -v);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const CoeffPoly& o)
{
    CoeffPoly r;
    for (const auto& [p1, v1] : terms_)
        for (const auto& [p2, v2] : o.terms_) r.add_term(p1 + p2, v1 * v2);
    *this = std::move(r);
    return *this;
}

std::complex<double> CoeffPoly::evaluate(double c) const
{
    std::complex<double> sum = 0.0;
    for (const auto& [p, v] : terms_)
        sum += std::complex<double>(v.re.to_double(), v.im.to_double()) * std::pow(c, p);
    return sum;
}

std::string CoeffPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [p, v] = *it;
        std::string t;
        std::string vs = v.to_string();
        if (p == 0) {
            t = vs;
        } else {
            std::string cp = p == 1 ? "c" : "c^" + std::to_string(p);
            if (vs == "1")
                t = cp;
            else if (vs == "-1")
                t = "-" + cp;
            else if (v.re.is_zero() || v.im.is_zero())
                t = vs + "*" + cp;
            else
                t = "(" + vs + ")*" + cp;
        }
        if (!out.empty()) out += " + ";
        out += t;
    }
    return out;
}

// ------------------------------------------------------------- WeylMonomial

int WeylMonomial::total_x_degree() const
{
    return std::accumulate(xdeg.begin(), xdeg.end(), 0);
}

int WeylMonomial::total_d_degree() const
{
    return std::accumulate(ddeg.begin(), ddeg.end(), 0);
}

std::string slot_name(int dim, std::size_t slot, const char* prefix)
{
    auto i = slot / static_cast<std::size_t>(dim) + 1;
    auto j = slot % static_cast<std::size_t>(dim) + 1;
    return std::string(prefix) + std::to_string(i) + std::to_string(j);
}

namespace {

void check_index(int dim, int i, int j)
{
    if (i < 1 || j < 1 || i > dim || j > dim)
        throw std::out_of_range("matrix index out of range: (" + std::to_string(i) + "," +
                                std::to_string(j) + ") for size " + std::to_string(dim));
}

void require_same_dim(int a, int b)
{
    if (a != b)
        throw DimensionError("operator dimension mismatch: " + std::to_string(a) + " vs " +
                             std::to_string(b));
}

std::uint8_t checked_degree(int v)
{
    if (v > 255) throw std::overflow_error("weyl: exponent exceeds 255");
    return static_cast<std::uint8_t>(v);
}

std::int64_t falling(int n, int k)
{
    std::int64_t r = 1;
    for (int t = 0; t < k; ++t) r *= (n - t);
    return r;
}

std::int64_t binom(int n, int k)
{
    std::int64_t r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// (x^a ∂^b)(x^c ∂^d) = Σ_k Π_s C(b_s,k_s) C(c_s,k_s) k_s! · x^{a+c-k} ∂^{b+d-k}
void multiply_into(const WeylMonomial& left, const WeylMonomial& right, const CoeffPoly& coeff,
                   WeylOp& out)
{
    const std::size_t n = left.xdeg.size();
    std::vector<std::size_t> contract;
    for (std::size_t s = 0; s < n; ++s)
        if (left.ddeg[s] > 0 && right.xdeg[s] > 0) contract.push_back(s);

    WeylMonomial base(n);
    for (std::size_t s = 0; s < n; ++s) {
        base.xdeg[s] = checked_degree(left.xdeg[s] + right.xdeg[s]);
        base.ddeg[s] = checked_degree(left.ddeg[s] + right.ddeg[s]);
    }

    // depth-first over the contraction counts of each shared slot
    auto recurse = [&](auto&& self, std::size_t idx, WeylMonomial& cur, std::int64_t factor) -> void {
        if (idx == contract.size()) {
            out.add_term(cur, coeff * CoeffPoly(GaussianRational{factor}));
            return;
        }
        const std::size_t s = contract[idx];
        const int b = left.ddeg[s];
        const int c = right.xdeg[s];
        const int kmax = std::min(b, c);
        for (int k = 0; k <= kmax; ++k) {
            std::int64_t f = binom(b, k) * binom(c, k) * falling(k, k);
            cur.xdeg[s] = static_cast<std::uint8_t>(base.xdeg[s] - k);
            cur.ddeg[s] = static_cast<std::uint8_t>(base.ddeg[s] - k);
            self(self, idx + 1, cur, factor * f);
        }
        cur.xdeg[s] = base.xdeg[s];
        cur.ddeg[s] = base.ddeg[s];
    };
    WeylMonomial cur = base;
    recurse(recurse, 0, cur, 1);
}

}  // namespace

// ------------------------------------------------------------------- WeylOp

WeylOp::WeylOp(int dim) : dim_(dim)
{
    if (dim < 1) throw std::invalid_argument("weyl: matrix size must be positive");
}

WeylOp WeylOp::scalar(int dim, const CoeffPoly& value)
{
    WeylOp op(dim);
    op.add_term(WeylMonomial(op.slots()), value);
    return op;
}

WeylOp WeylOp::x(int dim, int i, int j)
{
    check_index(dim, i, j);
    WeylOp op(dim);
    WeylMonomial m(op.slots());
    m.xdeg[static_cast<std::size_t>((i - 1) * dim + (j - 1))] = 1;
    op.add_term(m, CoeffPoly(1));
    return op;
}

WeylOp WeylOp::d(int dim, int i, int j)
{
    check_index(dim, i, j);
    WeylOp op(dim);
    WeylMonomial m(op.slots());
    m.ddeg[static_cast<std::size_t>((i - 1) * dim + (j - 1))] = 1;
    op.add_term(m, CoeffPoly(1));
    return op;
}

bool WeylOp::is_scalar() const
{
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == WeylMonomial(slots());
}

CoeffPoly WeylOp::scalar_part() const
{
    auto it = terms_.find(WeylMonomial(slots()));
    return it == terms_.end() ? CoeffPoly{} : it->second;
}

void WeylOp::add_term(const WeylMonomial& m, const CoeffPoly& coeff)
{
    if (m.xdeg.size() != slots() || m.ddeg.size() != slots())
        throw DimensionError("weyl: monomial slot count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp WeylOp::operator-() const
{
    WeylOp r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o)
{
    require_same_dim(dim_, o.dim_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o)
{
    require_same_dim(dim_, o.dim_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

WeylOp& WeylOp::operator*=(const CoeffPoly& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    TermMap scaled;
    for (const auto& [m, c] : terms_) {
        CoeffPoly v = c * s;
        if (!v.is_zero()) scaled.emplace(m, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b)
{
    require_same_dim(a.dim_, b.dim_);
    WeylOp out(a.dim_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) multiply_into(ma, mb, ca * cb, out);
    return out;
}

std::string WeylOp::to_string() const
{
    if (terms_.empty()) return "0";
    // reverse map order, so the constant term comes last
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        auto append = [&](std::size_t s, int deg, const char* prefix) {
            if (deg == 0) return;
            if (!mono.empty()) mono += "*";
            mono += slot_name(dim_, s, prefix);
            if (deg > 1) mono += "^" + std::to_string(deg);
        };
        for (std::size_t s = 0; s < slots(); ++s) append(s, m.xdeg[s], "x");
        for (std::size_t s = 0; s < slots(); ++s) append(s, m.ddeg[s], "d");

        std::string cs = c.to_string();
        std::string term;
        if (mono.empty())
            term = "(" + cs + ")";
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = "(" + cs + ")*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

WeylOp op_add(const WeylOp& a, const WeylOp& b)
{
    return a + b;
}

WeylOp op_mul(const WeylOp& a, const WeylOp& b)
{
    return a * b;
}

WeylOp op_bracket(const WeylOp& a, const WeylOp& b)
{
    return a * b - b * a;
}

WeylOp op_formal_adjoint(const WeylOp& a)
{
    // (x^a ∂^b)† = (-1)^{|b|} ∂^b x^a, renormal-ordered
    WeylOp out(a.dim());
    const std::size_t n = a.slots();
    for (const auto& [m, c] : a.terms()) {
        WeylMonomial left(n), right(n);
        left.ddeg = m.ddeg;
        right.xdeg = m.xdeg;
        CoeffPoly sign = (m.total_d_degree() % 2 == 0) ? CoeffPoly(1) : CoeffPoly(-1);
        multiply_into(left, right, c * sign, out);
    }
    return out;
}

WeylOp gaussian_conjugate(const WeylOp& a, bool c_is_formal)
{
    const int dim = a.dim();
    const std::size_t n = a.slots();
    const CoeffPoly inv_c = c_is_formal ? CoeffPoly::c(-1) : CoeffPoly(1);

    // shifted[s][k] = (∂_s - c⁻¹ x_s)^k, built on demand
    std::vector<std::vector<WeylOp>> shifted(n);
    auto power = [&](std::size_t s, int k) -> const WeylOp& {
        auto& cache = shifted[s];
        if (cache.empty()) cache.push_back(WeylOp::scalar(dim, CoeffPoly(1)));
        if (static_cast<int>(cache.size()) <= k) {
            const int i = static_cast<int>(s) / dim + 1;
            const int j = static_cast<int>(s) % dim + 1;
            WeylOp step = WeylOp::d(dim, i, j) - WeylOp::x(dim, i, j) * inv_c;
            while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * step);
        }
        return cache[static_cast<std::size_t>(k)];
    };

    WeylOp out(dim);
    for (const auto& [m, c] : a.terms()) {
        WeylMonomial xpart(n);
        xpart.xdeg = m.xdeg;
        WeylOp term(dim);
        term.add_term(xpart, c);
        for (std::size_t s = 0; s < n; ++s)
            if (m.ddeg[s] > 0) term = term * power(s, m.ddeg[s]);
        out += term;
    }
    return out;
}

// --------------------------------------------------------------- Polynomial

Polynomial::Polynomial(int dim) : dim_(dim)
{
    if (dim < 1) throw std::invalid_argument("polynomial: matrix size must be positive");
}

Polynomial Polynomial::constant(int dim, const CoeffPoly& value)
{
    Polynomial p(dim);
    p.add_term(Exponent(static_cast<std::size_t>(dim) * dim, 0), value);
    return p;
}

Polynomial Polynomial::monomial(int dim, const Exponent& exponent, const CoeffPoly& coeff)
{
    Polynomial p(dim);
    p.add_term(exponent, coeff);
    return p;
}

bool Polynomial::is_constant() const
{
    if (terms_.empty()) return true;
    const auto& e = terms_.begin()->first;
    return terms_.size() == 1 && std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
}

void Polynomial::add_term(const Exponent& e, const CoeffPoly& coeff)
{
    if (e.size() != static_cast<std::size_t>(dim_) * dim_)
        throw DimensionError("polynomial: exponent slot count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_dim(dim_, o.dim_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (std::size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += slot_name(dim_, s);
            if (e[s] > 1) mono += "^" + std::to_string(e[s]);
        }
        std::string cs = c.to_string();
        std::string term;
        if (mono.empty())
            term = "(" + cs + ")";
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = "(" + cs + ")*" + mono;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

Polynomial op_apply_to_poly(const WeylOp& a, const Polynomial& p)
{
    require_same_dim(a.dim(), p.dim());
    Polynomial out(p.dim());
    const std::size_t n = a.slots();
    for (const auto& [m, c] : a.terms()) {
        for (const auto& [e, pc] : p.terms()) {
            std::int64_t factor = 1;
            Polynomial::Exponent r(n);
            bool vanishes = false;
            for (std::size_t s = 0; s < n && !vanishes; ++s) {
                if (e[s] < m.ddeg[s]) {
                    vanishes = true;
                    break;
                }
                factor *= falling(e[s], m.ddeg[s]);
                r[s] = checked_degree(e[s] - m.ddeg[s] + m.xdeg[s]);
            }
            if (vanishes) continue;
            out.add_term(r, c * pc * CoeffPoly(GaussianRational{factor}));
        }
    }
    return out;
}

CoeffPoly eval_at_identity(const Polynomial& p)
{
    CoeffPoly sum;
    const auto dim = static_cast<std::size_t>(p.dim());
    for (const auto& [e, c] : p.terms()) {
        bool off_diagonal = false;
        for (std::size_t s = 0; s < e.size(); ++s)
            if (e[s] > 0 && s / dim != s % dim) off_diagonal = true;
        if (!off_diagonal) sum += c;
    }
    return sum;
}

std::vector<Polynomial> test_monomials(int dim, int max_degree)
{
    const std::size_t n = static_cast<std::size_t>(dim) * dim;
    std::vector<Polynomial> out;
    Polynomial::Exponent e(n, 0);
    auto recurse = [&](auto&& self, std::size_t s, int remaining) -> void {
        if (s == n) {
            out.push_back(Polynomial::monomial(dim, e));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[s] = static_cast<std::uint8_t>(k);
            self(self, s + 1, remaining - k);
        }
        e[s] = 0;
    };
    recurse(recurse, 0, max_degree);
    return out;
}

}  // namespace hb
