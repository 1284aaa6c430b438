#pragma once

#include "hb/algebra.hpp"

namespace hb {

inline constexpr int kMaxHglEll = 4;

/// Weyl parts of the hgl generators on functions of an (ℓ+1)×(ℓ+1) matrix:
/// X = i·x, Y = -c·∂, C = i·c,
/// EL(i,j) = -Σ_k x_jk ∂_ik - (ℓ+1)/2·δ_ij,  ER(i,j) = Σ_k x_ki ∂_kj + (ℓ+1)/2·δ_ij.
/// Basis order: X, Y, C, EL, ER (row-major in (i,j)).
Realization build_hgl_realization(int ell);

/// Expected brackets for every unordered pair of hgl generators.
RelationTable build_hgl_relation_table(int ell);

/// Right side of [a,b] for hgl generators (X, Y, C, EL, ER) from the defining relations.
LinearCombination hgl_expected_bracket(GeneratorId a, GeneratorId b);

/// Hatted generators êL(i,j) = EL - C⁻¹Σ_k X_jk Y_ik, êR(i,j) = ER + C⁻¹Σ_k X_ki Y_kj.
WeylOp hgl_hat_left(const Realization& real, int i, int j);
WeylOp hgl_hat_right(const Realization& real, int i, int j);

/// ê commute with X, Y, C and reduce to the scalars ∓(ℓ+1)/2·δ_ij.
VerificationReport verify_lemma1_factorization(const Realization& real);

/// X - iY and K = e_ij - e_ji (i<j, both copies) annihilate the Gaussian.
VerificationReport verify_spherical_vector(const Realization& real);

/// X_ij - iδ_ij and EL_ij + ER_ij annihilate δ(x - Id), tested on monomials.
VerificationReport verify_whittaker_covector(const Realization& real, int max_test_degree = 4);

}  // namespace hb
