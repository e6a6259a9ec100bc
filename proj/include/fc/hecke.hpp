/*
 * hecke.hpp
 * ---------
 * Hecke algebra elements over Z[q, q^{-1}] on the group-element basis
 * {g_w}, with the defining relations
 *
 *   g_s g_w = g_{sw}                if s is not a left descent of w,
 *   g_s g_w = q g_{sw} + (q-1) g_w  if s is a left descent of w,
 *
 * together with the rank-raising algebra morphisms Rn (C-tilde),
 * Qn (B-tilde) and Pn (D-tilde). The affine generator of the source
 * maps to a conjugate of the corresponding target generator:
 *
 *   Rn, Qn: e_t    |-> g_{sn} g_t g_{sn}^{-1}
 *   Pn:     e_sbn  |-> g_{sN} g_{sn} g_{sbN} g_{sn}^{-1} g_{sN}^{-1}
 *
 * where sN, sbN are the new top generators one rank up, and the
 * generator inverse is g_s^{-1} = p g_s + (p-1) with p = q^{-1}.
 */
#pragma once

#include <vector>

#include "fc/coxeter.hpp"
#include "fc/lincomb.hpp"
#include "fc/towers.hpp"

namespace fc {

struct HeckeElt {
    CoxeterSystem system;
    LinComb body; // canonical word -> coefficient

    bool operator==(const HeckeElt& o) const;
};

HeckeElt hecke_zero(const CoxeterSystem& sys);
HeckeElt hecke_one(const CoxeterSystem& sys);

// g_w for the element represented by w (any word; reduced to canonical).
HeckeElt hecke_basis(const CoxeterSystem& sys, const Word& w);

HeckeElt hecke_add(const HeckeElt& a, const HeckeElt& b);
HeckeElt hecke_scale(const LaurentPoly& c, const HeckeElt& h);

// Left multiplication by the generator g_s per the defining relations.
HeckeElt mult_left_gen(int s, const HeckeElt& h);

// Bilinear product; expands the keys of a into reduced words and folds
// mult_left_gen right to left over b. SystemMismatchError if the
// systems differ.
HeckeElt mult(const HeckeElt& a, const HeckeElt& b);

// The unique inverse of g_s: p g_s + (p-1), verified by multiplication.
HeckeElt gen_inverse(const CoxeterSystem& sys, int s);

enum class AlgebraMapId { Rn, Qn, Pn };

// Image under the rank-raising morphism of the basis element e_w of
// the source algebra with classical subscript n (library rank n+1).
// The word w may be arbitrary; it is interpreted as a source element.
// DomainError if the family of the map does not admit the given rank.
HeckeElt morphism_image(AlgebraMapId id, int n, const Word& w);

// Stratification by (affine length, then Coxeter length) of the keys.
struct LeadingDecomposition {
    int max_affine = 0;   // largest affine length among the keys
    LinComb top;          // terms maximal in (affine length, length)
    LinComb rest;         // everything else
};

LeadingDecomposition leading_decomposition(const HeckeElt& h);

// True iff the bodies are linearly independent over the fraction field.
bool check_independent(const std::vector<HeckeElt>& elements);

// Homomorphy certificate: the generator images satisfy the quadratic
// relation and every braid relation of the source presentation.
// DomainError for Pn with n < 4 (the source diagram degenerates).
CheckReport hecke_homomorphy(AlgebraMapId id, int n);

// Substitute q = 1 and multiply in the group algebra: used as an
// independent oracle for the product.
std::map<Word, BigInt> specialize_q1(const HeckeElt& h);

} // namespace fc
