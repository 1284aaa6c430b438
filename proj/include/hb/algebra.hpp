#pragma once

// Generator labels, expected-bracket tables and Weyl realizations shared by
// the hgl and hsp verifiers.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hb/report.hpp"
#include "hb/weyl.hpp"

namespace hb {

enum class GenTag { X, Y, C, EL, ER, AL, AR, BL, BR, CL, CR };

struct GeneratorId {
    GenTag tag = GenTag::C;
    int i = 0;
    int j = 0;

    /// Builds a label, storing symmetric b/c generators with i ≤ j.
    static GeneratorId make(GenTag tag, int i = 0, int j = 0);
    static GeneratorId central() { return {}; }

    bool symmetric() const;
    std::string to_string() const;

    friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

/// Σ coeff·generator + central scalar, exact.
struct LinearCombination {
    std::map<GeneratorId, CoeffPoly> terms;
    CoeffPoly central;

    LinearCombination() = default;
    LinearCombination(GeneratorId g, CoeffPoly coeff = CoeffPoly(1)) { add(g, coeff); }

    LinearCombination& add(GeneratorId g, const CoeffPoly& coeff);
    LinearCombination& add_central(const CoeffPoly& v);
    bool is_zero() const { return terms.empty() && central.is_zero(); }
    std::string to_string() const;
};

struct RelationEntry {
    GeneratorId lhs1;
    GeneratorId lhs2;
    LinearCombination rhs;
};

struct RelationTable {
    int ell = 0;
    std::vector<RelationEntry> entries;

    /// Entry for the ordered pair, or nullptr.
    RelationEntry* find(GeneratorId a, GeneratorId b);
};

class Realization {
public:
    explicit Realization(int ell) : ell_(ell) {}

    int ell() const { return ell_; }
    int dim() const { return ell_ + 1; }
    /// Generators in insertion order.
    const std::vector<GeneratorId>& basis() const { return basis_; }

    void set(GeneratorId g, WeylOp op);
    bool contains(GeneratorId g) const { return ops_.count(g) != 0; }
    const WeylOp& at(GeneratorId g) const;
    WeylOp realize(const LinearCombination& lc) const;

private:
    int ell_;
    std::vector<GeneratorId> basis_;
    std::map<GeneratorId, WeylOp> ops_;
};

/// [g1,g2] − rhs for every table entry; nonzero results become residuals.
VerificationReport verify_relations(const Realization& real, const RelationTable& table,
                                    const std::string& task = "relations");

/// [[a,b],c] + [[b,c],a] + [[c,a],b] over all triples of distinct basis elements.
VerificationReport verify_jacobi(const Realization& real);

/// Residual entry for "name": value, flagged central when value is a scalar.
Residual make_residual(const std::string& relation, const WeylOp& value);

/// True when target = Σ λ_k(c)·basis_k with each λ_k a Laurent polynomial
/// supported on c^{-c_range..c_range}; decided by exact elimination over Q(i).
bool in_span(const WeylOp& target, const std::vector<WeylOp>& basis, int c_range = 2);

struct NamedOp {
    std::string name;
    WeylOp op;
};

/// Gaussian-conjugates each operator and applies it to 1; any nonzero
/// polynomial is reported.
VerificationReport check_gaussian_annihilation(const std::string& task, const std::vector<NamedOp>& ops);

/// Checks eval_at_identity(op†·p) = 0 for every monomial p of degree ≤ max_degree.
/// Each failing operator yields one residual naming the first failing monomial.
VerificationReport check_delta_equations(const std::string& task, int dim, const std::vector<NamedOp>& ops,
                                         int max_degree);

}  // namespace hb
