/*
 * forms.hpp
 * ---------
 * Interval words, Stembridge normal forms for the finite type-D
 * parabolic, and the bijective normal-form grammars for fully
 * commutative elements of the affine types B-tilde and D-tilde:
 * validation, rendering, enumeration, and parsing by exhaustive
 * search over the parameter grid.
 *
 * Conventions
 *   - An interval <m,j] over the sigma generators renders as
 *       2 <= m <= j : s_m s_{m+1} ... s_j
 *       m = 1       : s_1 s_2 ... s_j
 *       m = -1      : sb_1 s_2 ... s_j
 *       m = 0       : s_1 sb_1 s_2 ... s_j
 *       -j <= m <= -2 : s_|m| ... s_2 s_1 sb_1 s_2 ... s_j
 *       m = j+1 or m = -(j+1) : empty word
 *   - Reversed intervals <m,j]^{-1} are rendered with any adjacent
 *     pair sb_1 s_1 normalized to s_1 sb_1.
 *   - Forms are classified strictly by affine length: 0 -> Finite,
 *     1 -> AffineOne, >= 2 -> FirstType or SecondType.
 */
#pragma once

#include <utility>
#include <vector>

#include "fc/coxeter.hpp"

namespace fc {

// Stembridge normal form of a fully commutative element of the finite
// type-D parabolic: a concatenation of intervals <m_i, n_i] with
// n >= n_1 > ... > n_r >= 1 and |m_i| <= n_i subject to the sign and
// monotonicity conditions checked by dform_valid.
struct DForm {
    std::vector<std::pair<int, int>> terms; // (m_i, n_i)

    bool operator==(const DForm& o) const { return terms == o.terms; }
    bool operator!=(const DForm& o) const { return terms != o.terms; }
    bool empty() const { return terms.empty(); }
};

enum class FcClass { Finite, AffineOne, FirstType, SecondType };
std::string fc_class_name(FcClass c);

enum class TailKind { Stembridge, InverseInterval };

// Unified tagged form for both affine families; unused fields stay at
// their defaults. The interpretation per class:
//   Finite      tail (Stembridge, possibly empty)
//   AffineOne   B-tilde: <i,n] t v where v is the tail
//               D-tilde: <i,n] <j,n-1] sbn v
//   FirstType   B-tilde: <-i,n] t (<-n,n] t)^k <f,n]^{-1}
//               D-tilde: sbn^eps sn^eta <i,n-1] sbn
//                        (sn <-(n-1),n-1] sbn)^k <f,n]^{-1}
//   SecondType  B-tilde: <i_1,n] t ... <i_p,n] t then k blocks
//               <j_s,n] t with j_s alternating from j1, then tail w_r
//               D-tilde: <i_s,n] <j_s,n-1] sbn blocks, then k blocks
//               <-1,n] <1,n-1] sbn, then tail w_r; psi1 mirrors the
//               whole word through the sb1 / s1 diagram symmetry.
// A tail of kind InverseInterval renders as <h,n]^{-1}; a Stembridge
// tail with no terms is the empty word.
struct FcForm {
    Family family = Family::D;
    FcClass cls = FcClass::Finite;
    int i = 0;
    int j = 0;
    int eps = 0;
    int eta = 0;
    int k = 0;
    int f = 0;
    int h = 0;
    int j1 = 0; // sign of the first alternating block (SecondType B-tilde)
    std::vector<int> is;
    std::vector<int> js;
    bool psi1 = false;
    TailKind tail_kind = TailKind::Stembridge;
    DForm tail;

    bool operator==(const FcForm& o) const {
        return family == o.family && cls == o.cls && i == o.i && j == o.j &&
               eps == o.eps && eta == o.eta && k == o.k && f == o.f && h == o.h &&
               j1 == o.j1 && is == o.is && js == o.js && psi1 == o.psi1 &&
               tail_kind == o.tail_kind && tail == o.tail;
    }
    bool operator!=(const FcForm& o) const { return !(*this == o); }
};

using BForm = FcForm;
using DAffForm = FcForm;

// --- Interval words -----------------------------------------------------

Word interval_word(const CoxeterSystem& sys, int m, int j);
Word interval_word_inv(const CoxeterSystem& sys, int m, int j);
int interval_len(int m, int j);

// --- Stembridge forms ---------------------------------------------------

bool dform_valid(const CoxeterSystem& sys, const DForm& d);
Word dform_word(const CoxeterSystem& sys, const DForm& d);
int dform_len(const DForm& d);
DForm psi1_dform(const DForm& d);

// All valid Stembridge forms of word length <= max_len.
std::vector<DForm> enumerate_dforms(const CoxeterSystem& sys, int max_len);

// --- Affine normal forms ------------------------------------------------

// Throws InvalidFormError naming the violated clause.
void validate_form(const CoxeterSystem& sys, const FcForm& form);

// Validates, then emits the displayed reduced word.
Word render_form(const CoxeterSystem& sys, const FcForm& form);

// Closed affine-length formula of a form (not re-counted from a word).
int form_affine_length(const FcForm& form);

// Every valid form whose rendered word has length <= max_len and whose
// affine length is <= max_affine, paired with its word, ordered by
// (affine length, Coxeter length, ShortLex). Each form appears once.
std::vector<std::pair<FcForm, Word>> enumerate_fc(const CoxeterSystem& sys,
                                                  int max_len, int max_affine,
                                                  size_t budget = kDefaultBudget);

// Unique normal form of a fully commutative element, found by exhaustive
// search over the parameter grid (cached per system).
FcForm parse_form(const CoxeterSystem& sys, const GroupElement& x);
FcForm parse_B(const CoxeterSystem& sys, const GroupElement& x);
FcForm parse_D(const CoxeterSystem& sys, const GroupElement& x);
Word render_B(const CoxeterSystem& sys, const FcForm& form);
Word render_D(const CoxeterSystem& sys, const FcForm& form);

// Stembridge form of a fully commutative element of the finite type-D
// parabolic (the whole group for family D).
DForm parse_finite_D(const CoxeterSystem& sys, const GroupElement& x);

enum class ExtremalKind { B, D };

// B-extremal: sigma_n occurs in a reduced word; D-extremal: sigma_{n-1}
// occurs twice. Well defined on fully commutative elements.
bool extremal(const CoxeterSystem& sys, const GroupElement& x, ExtremalKind kind);

// Diagram symmetry: which = 1 swaps sb1 and s1, which = n swaps sn and
// sbn (D-tilde only).
Word psi_word(const CoxeterSystem& sys, const Word& w, int which);
GroupElement psi_element(const CoxeterSystem& sys, const GroupElement& x, int which);

} // namespace fc
