/*
 * towers.hpp
 * ----------
 * Rank-raising monomorphisms between the affine families and the
 * induced injections I and J on fully commutative normal forms.
 *
 *   Fn : C-tilde rank r -> rank r+1    t |-> s_{r-1} t s_{r-1}
 *   Ln : B-tilde rank r -> rank r+1    t |-> s_{r-1} t s_{r-1}
 *   Gn : D-tilde rank r -> rank r+1    sbn |-> s_{r-1} s_{r-2} sbn' s_{r-2} s_{r-1}
 *   beta  : B-tilde rank r -> C-tilde rank r   sb1 |-> s0 s1 s0
 *   delta : D-tilde rank r -> B-tilde rank r   sbn |-> t sn t
 *
 * All other generators map to their namesakes. The two squares
 * beta . Ln = Fn . beta and delta . Gn = Ln . delta commute.
 *
 * I and J act on normal forms of fully commutative elements and raise
 * the rank by one. At the word level they substitute, for each
 * occurrence of the affine generator,
 *   B-tilde second type:  I: sn' t      J: t sn'
 *   B-tilde otherwise:    I = J: sn' t sn'
 *   D-tilde second type:  I: sn' sn sbn'    J: sbn' sn sn'
 *   D-tilde otherwise:    I = J: sn sbn' sn'  with two exceptions
 *     (first type eps=1: the leftmost occurrence becomes sn' sbn' sn;
 *      affine length one with i < n+1 outside the i=n, j=-(n-1)
 *      reversed-interval family: sn' sn sbn')
 * where sn' and sbn' are the new top generators. The form-level maps
 * return the normal form of the image directly; the word-level paths
 * exist as an independent cross-check.
 */
#pragma once

#include <string>
#include <vector>

#include "fc/coxeter.hpp"
#include "fc/forms.hpp"

namespace fc {

enum class TowerMapId { Fn, Ln, Gn, Beta, Delta };

std::string tower_map_name(TowerMapId id);

// A materialized letterwise substitution between two systems.
struct TowerMap {
    TowerMapId id;
    CoxeterSystem source;
    CoxeterSystem target;
    std::vector<Word> sub; // image word of each source generator
};

// source_rank is the rank of the source system; Fn/Ln/Gn raise the rank
// by one, Beta/Delta keep it. Raises RankError through build_system.
TowerMap make_tower_map(TowerMapId id, int source_rank);

Word tower_image(const TowerMap& map, const Word& w);

// Rank-raising substitutions only (Fn, Ln, Gn); DomainError otherwise.
Word substitute(TowerMapId id, int source_rank, const Word& w);

// Same-rank embeddings only (Beta, Delta); DomainError otherwise.
Word embed(TowerMapId id, int rank, const Word& w);

struct CheckReport {
    int checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(const std::string& what) { failures.push_back(what); }
};

// With n the classical subscript (rank - 1): verifies that both squares
// commute on every generator, that every map above sends each defining
// relation of its source to the identity, and that each map is
// injective on the ball of radius 6. Requires n > 2.
CheckReport check_square(int n);

// For every element w of the source system (B-tilde for Ln, C-tilde
// for Fn, classical subscript n) with l(w) <= max_len: the substituted
// canonical word passes the independent reflection-multiset
// reducedness check, l(image) = l(w) + 2 L(w), and L is preserved.
CheckReport length_theorem_check(TowerMapId id, int n, int max_len);

// Form-level injections; the result is a valid form one rank up.
FcForm map_I(const CoxeterSystem& src, const FcForm& form);
FcForm map_J(const CoxeterSystem& src, const FcForm& form);

// Word-level cross-check: the same images computed by substitution
// into the rendered normal form, as words of the rank+1 system.
Word map_I_word(const CoxeterSystem& src, const FcForm& form);
Word map_J_word(const CoxeterSystem& src, const FcForm& form);

} // namespace fc
