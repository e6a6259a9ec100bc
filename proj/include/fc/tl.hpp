/*
 * tl.hpp
 * ------
 * Temperley-Lieb algebras on the fully commutative basis {T_w}: the
 * quotient of the Hecke algebra by the two-sided ideal generated by
 * the elements L_{s,t} = sum of g_w over the parabolic <s,t> for each
 * non-commuting pair of generators. Equivalently, the quotient is cut
 * out by
 *
 *   V(x,y) = xyx + xy + yx + x + y + 1           (bond of order 3)
 *   Z(x,y) = xyxy + xyx + yxy + xy + yx + x + y + 1   (order 4)
 *
 * vanishing on the corresponding generator pairs, together with the
 * quadratic relation T^2 = (q-1)T + q.
 *
 * The reduction engine multiplies a basis element by a generator on
 * the right. When the product leaves the fully commutative set, the
 * unique braid created is located at the end of some word in the
 * commutation class; the braid monomial is then replaced by minus the
 * sum of all shorter alternating monomials (V = 0 or Z = 0) and the
 * strictly shorter summands are reduced recursively.
 *
 * The rank-raising morphisms Qn (B-tilde) and Pn (D-tilde) descend
 * from the Hecke level; their leading terms on the fully commutative
 * basis are governed by the normal-form injections I and J, which the
 * expansion reports here verify stratum by stratum.
 */
#pragma once

#include <vector>

#include "fc/coxeter.hpp"
#include "fc/forms.hpp"
#include "fc/hecke.hpp"
#include "fc/lincomb.hpp"

namespace fc {

struct TLElt {
    CoxeterSystem system;
    LinComb body; // canonical word of a fully commutative element -> coeff

    bool operator==(const TLElt& o) const;
};

TLElt tl_zero(const CoxeterSystem& sys);
TLElt tl_one(const CoxeterSystem& sys);

// T_w for the fully commutative element represented by w; NotFCError
// if the word's element is not fully commutative.
TLElt tl_basis(const CoxeterSystem& sys, const Word& w);

TLElt tl_add(const TLElt& a, const TLElt& b);
TLElt tl_scale(const LaurentPoly& c, const TLElt& t);

// Right multiplication by T_s through the reduction engine.
TLElt mult_right_gen(const TLElt& t, int s);

// Canonical image of an arbitrary word, folded from T_1.
TLElt reduce_word(const CoxeterSystem& sys, const Word& w);

// Bilinear product; SystemMismatchError if the systems differ.
TLElt mult(const TLElt& a, const TLElt& b);

// p T_s + (p - 1), the image of the Hecke generator inverse.
TLElt tl_gen_inverse(const CoxeterSystem& sys, int s);

// Image of the basis element T_w of the source algebra (classical
// subscript n) under Qn or Pn. DomainError for Rn or a non-fc word.
TLElt tl_morphism_image(AlgebraMapId id, int n, const Word& w);

// Stratification by (affine length, then Coxeter length) of the keys;
// always defined because the keys are fully commutative.
LeadingDecomposition tl_leading_terms(const TLElt& t);

// Evaluates the full defining presentation through the engine: the
// quadratic relation for every generator, commutation for every bond
// of order 2, the braid equality and V = 0 for every bond of order 3,
// and Z = 0 for every bond of order 4.
CheckReport check_tl_relations(const CoxeterSystem& sys);

// Images of every fully commutative basis element with l <= max_len
// are linearly independent, certified by exact rank.
CheckReport check_faithful(AlgebraMapId id, int n, int max_len);

// Whether the fully commutative element x of affine length 1 in the
// target of the D-tilde injection I (source classical subscript n)
// lies in the image of I, decided by inverting the normal form.
bool is_in_image_I(int n, const GroupElement& x);

// Leading-term expansion reports for the morphism images over every
// fully commutative source element with l <= max_len and affine
// length <= max_affine:
//   B-tilde: single top term p^L T_I outside the second type; top pair
//   {(-1)^L T_I, (-p)^L T_J} on it, with the t sn t left-factor
//   refinement when the normal form begins and ends with t.
//   D-tilde: single top term p^L T_I for the first type, top pair
//   {T_I, p^{2L} T_J} for the second type, and for affine length one
//   the stratum {p^nu T_I} or {T_I, p T_I(wbar)} with every other
//   same-length key outside the image of I.
CheckReport check_expansions_B(int n, int max_len, int max_affine);
CheckReport check_expansions_D(int n, int max_len, int max_affine);

} // namespace fc
