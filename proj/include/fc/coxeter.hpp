/*
 * coxeter.hpp
 * -----------
 * Coxeter systems of types D, B-tilde, C-tilde, D-tilde, words over
 * their alphabets, and the exact geometric representation.
 *
 * Conventions
 *   - "rank" is the number of generators of the system. The classical
 *     subscript is rank-1: the affine system with subscript n+1 has n+2
 *     generators. The member n() returns the largest plain sigma index,
 *     so subscript = n()+1 for the affine families and the finite family
 *     of type D on generators {sb1, s1, ..., sn} has subscript n()+1 too.
 *   - Generators are addressed by their position in the fixed alphabet
 *     order used for ShortLex:
 *       D:        sb1 < s1 < s2 < ... < sn
 *       B-tilde:  sb1 < s1 < ... < sn < t
 *       D-tilde:  sb1 < s1 < ... < sn < sbn
 *       C-tilde:  s0 < s1 < ... < sn < t
 *   - Group elements are exact matrices over Z[sqrt 2] acting on the
 *     simple-root basis; sqrt 2 only appears when the diagram has an
 *     order-4 edge. Matrix equality is element equality, which decides
 *     the word problem without any rewriting.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fc/errors.hpp"

namespace fc {

enum class Family { D, Btilde, Ctilde, Dtilde };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Exact element of Z[sqrt 2]: a + b*sqrt(2).
struct QuadInt {
    long long a = 0;
    long long b = 0;

    QuadInt() = default;
    QuadInt(long long a_, long long b_ = 0) : a(a_), b(b_) {}

    QuadInt operator+(const QuadInt& o) const { return {a + o.a, b + o.b}; }
    QuadInt operator-(const QuadInt& o) const { return {a - o.a, b - o.b}; }
    QuadInt operator*(const QuadInt& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }
    QuadInt operator-() const { return {-a, -b}; }
    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }
    bool operator<(const QuadInt& o) const {
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
    bool is_zero() const { return a == 0 && b == 0; }

    // Exact sign of a + b*sqrt(2): compare a^2 against 2 b^2.
    int sign() const;
};

// A word is a sequence of generator positions in the owning alphabet.
using Word = std::vector<int>;

// True length-then-lexicographic order on words.
bool shortlex_less(const Word& a, const Word& b);

class CoxeterSystem {
public:
    Family family;
    int rank;                          // number of generators
    std::vector<std::string> tokens;   // alphabet in ShortLex order
    std::vector<std::vector<int>> cox; // m(s,t), diagonal 1

    // Largest plain sigma index (see file header).
    int n() const;

    int m(int s, int t) const { return cox[s][t]; }
    bool commutes(int s, int t) const { return cox[s][t] == 2; }
    bool has_order4_edge() const;

    // Position of the named generator, or -1 when absent from the family.
    int gen_sb1() const;
    int gen_sigma(int i) const; // s_i, 1 <= i <= n()
    int gen_sbn() const;        // sigma-bar-n (D-tilde only)
    int gen_t() const;          // affine t (B-tilde / C-tilde only)
    int gen_s0() const;         // sigma_0 (C-tilde only)

    // Distinguished generator counted by affine length (t or sbn), -1 for D.
    int affine_gen() const;

    bool operator==(const CoxeterSystem& o) const {
        return family == o.family && rank == o.rank;
    }
    bool operator!=(const CoxeterSystem& o) const { return !(*this == o); }
};

CoxeterSystem build_system(Family family, int rank);

class GroupElement {
public:
    int rank = 0;
    std::vector<QuadInt> mat; // column-major: mat[c*rank + r] = coord of alpha_r in w(alpha_c)
    std::vector<QuadInt> inv; // matrix of w^{-1}, maintained alongside

    static GroupElement identity(const CoxeterSystem& sys);
    static GroupElement generator(const CoxeterSystem& sys, int s);

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;

    // Equality and ordering look at the matrix of w only.
    bool operator==(const GroupElement& o) const { return mat == o.mat; }
    bool operator!=(const GroupElement& o) const { return mat != o.mat; }
    bool operator<(const GroupElement& o) const { return mat < o.mat; }

    bool is_identity() const;

    // True iff s is a right (resp. left) descent of this element.
    bool right_descent(int s) const;
    bool left_descent(int s) const;
};

// --- Word plumbing ------------------------------------------------------

// Strict parse of whitespace-separated tokens; unknown token raises
// ParseError carrying the token position.
Word parse_word(const CoxeterSystem& sys, const std::string& text);
std::string render_word(const CoxeterSystem& sys, const Word& w);

void check_word(const CoxeterSystem& sys, const Word& w);

Word reversed(const Word& w);
int count_occurrences(const Word& w, int gen);

// --- Core operations ----------------------------------------------------

GroupElement element_of(const CoxeterSystem& sys, const Word& w);

// ShortLex-minimal reduced word, by greedy smallest left descent.
Word canonical_word(const CoxeterSystem& sys, const GroupElement& x);

int length(const CoxeterSystem& sys, const GroupElement& x);

enum class Side { Left, Right };
std::vector<int> descents(const CoxeterSystem& sys, const GroupElement& x, Side side);

// Incremental reducedness: a prefix stays reduced iff the appended letter
// is not already a right descent of it.
bool is_reduced(const CoxeterSystem& sys, const Word& w);

// Independent Bourbaki-criterion implementation: the word is reduced iff
// the reflections h_j = (s_1...s_{j-1}) s_j (s_1...s_{j-1})^{-1} are
// pairwise distinct.
std::vector<GroupElement> phi_multiset(const CoxeterSystem& sys, const Word& w);
bool is_reduced_phi(const CoxeterSystem& sys, const Word& w);

inline constexpr size_t kDefaultBudget = 20000000;

// Closure of a reduced word under swaps of adjacent commuting letters.
std::vector<Word> commutation_class(const CoxeterSystem& sys, const Word& w,
                                    size_t budget = kDefaultBudget);

bool is_fully_commutative(const CoxeterSystem& sys, const Word& reduced_word,
                          size_t budget = kDefaultBudget);
bool is_fully_commutative(const CoxeterSystem& sys, const GroupElement& x,
                          size_t budget = kDefaultBudget);

// All elements of length <= max_len with their canonical words, ordered by
// (length, ShortLex).
std::vector<std::pair<GroupElement, Word>> enumerate_ball(const CoxeterSystem& sys,
                                                          int max_len,
                                                          size_t budget = kDefaultBudget);

// Affine length of an element: count of t in B-tilde / C-tilde (any
// element), of sbn in D-tilde (fully commutative elements only).
int affine_length(const CoxeterSystem& sys, const GroupElement& x);
int affine_length_of_word(const CoxeterSystem& sys, const Word& w);

} // namespace fc
