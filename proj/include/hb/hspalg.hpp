#pragma once

#include "hb/algebra.hpp"

namespace hb {

inline constexpr int kMaxHspEll = 3;

/// Weyl parts of the hsp generators. AL/AR coincide with EL/ER of the hgl
/// realization; b and c are the quadratic operators
/// BL = ic Σ_k ∂_ik∂_jk, BR = (i/c) Σ_k x_ki x_kj,
/// CcL = (i/c) Σ_k x_ik x_jk, CcR = ic Σ_k ∂_ki∂_kj   (i ≤ j).
/// Basis order: X, Y, C, AL, AR, BL, BR, CcL, CcR.
Realization build_hsp_realization(int ell);

/// CcR(i,j) in the literal form ic Σ_k ∂_ki∂_ki (repeated column index),
/// kept to document why the realization uses ∂_ki∂_kj.
WeylOp hsp_cr_repeated_index(int ell, int i, int j);

/// Expected brackets within each sp copy, [AL,AR] = 0, the Heisenberg
/// relations and the mixed relations with X, Y, C. Pairs of generators from
/// different sp copies other than (AL,AR) are not part of the table; see
/// verify_sp_cross_copy. With printed_right_signs the right-copy mixed
/// relations use the opposite overall sign.
RelationTable build_hsp_relation_table(int ell, bool printed_right_signs = false);

VerificationReport verify_sp_relations(const Realization& real, const RelationTable& table);

/// Brackets between generators of different sp copies, as computed in the
/// realization. Informational: every nonzero value becomes a residual.
VerificationReport verify_sp_cross_copy(const Realization& real);

/// Hatted b and c commute with X, Y, C and reduce to scalars.
VerificationReport verify_lemma2_factorization(const Realization& real);

/// Closure of span{K, b - c, X - iY} up to central scalars, abelian ideal
/// A = span{X - iY}, and [K, b - c ; A] ⊆ A.
VerificationReport verify_lemma3_spherical_subalgebra(const Realization& real);

/// EL, ER, X, Y, C of the hgl realization equal AL, AR, X, Y, C here.
VerificationReport verify_hgl_embedding(const Realization& hgl_real, const Realization& hsp_real);

/// Spherical vector: every spanning element of the spherical subalgebra
/// annihilates the Gaussian. Whittaker covector: X_ij - iδ_ij, AL+AR,
/// BL-CcR and BR-CcL annihilate δ(x - Id), tested on monomials.
VerificationReport verify_sp_vectors(const Realization& real, int max_test_degree = 4);

}  // namespace hb
