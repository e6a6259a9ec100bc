/*
 * forms.cpp
 * ---------
 * Interval words, Stembridge forms, and the affine normal-form
 * grammars: validation, rendering, enumeration, and parsing by
 * cached exhaustive search.
 */
#include "fc/forms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace fc {

namespace {

int iabs(int x) { return x < 0 ? -x : x; }

void require_fork(const CoxeterSystem& sys) {
    if (sys.gen_sb1() < 0)
        throw DomainError("system has no sb1/s1 fork (type C-tilde unsupported here)");
}

void require_affine_grammar(const CoxeterSystem& sys) {
    if (sys.family != Family::Btilde && sys.family != Family::Dtilde)
        throw DomainError("affine normal forms exist for B-tilde and D-tilde only");
    if (sys.n() < 3)
        throw DomainError("affine normal forms need n >= 3 (rank >= 5)");
}

} // namespace

std::string fc_class_name(FcClass c) {
    switch (c) {
        case FcClass::Finite: return "finite";
        case FcClass::AffineOne: return "affine1";
        case FcClass::FirstType: return "first";
        case FcClass::SecondType: return "second";
    }
    return "?";
}

// --- Interval words -----------------------------------------------------

Word interval_word(const CoxeterSystem& sys, int m, int j) {
    require_fork(sys);
    if (j < 1 || j > sys.n()) throw IntervalError("interval right endpoint out of range");
    if (m > j + 1 || m < -(j + 1)) throw IntervalError("interval left endpoint out of range");
    Word w;
    if (m == j + 1 || m == -(j + 1)) return w;
    if (m >= 2) {
        for (int a = m; a <= j; ++a) w.push_back(sys.gen_sigma(a));
    } else if (m == 1) {
        for (int a = 1; a <= j; ++a) w.push_back(sys.gen_sigma(a));
    } else if (m == -1) {
        w.push_back(sys.gen_sb1());
        for (int a = 2; a <= j; ++a) w.push_back(sys.gen_sigma(a));
    } else { // m <= 0: descend to the fork, pass s1 sb1, ascend
        for (int a = -m; a >= 2; --a) w.push_back(sys.gen_sigma(a));
        w.push_back(sys.gen_sigma(1));
        w.push_back(sys.gen_sb1());
        for (int a = 2; a <= j; ++a) w.push_back(sys.gen_sigma(a));
    }
    return w;
}

int interval_len(int m, int j) {
    if (m == j + 1 || m == -(j + 1)) return 0;
    if (m >= 2) return j - m + 1;
    if (m == 1 || m == -1) return j;
    if (m == 0) return j + 1;
    return -m + j; // m <= -2
}

Word interval_word_inv(const CoxeterSystem& sys, int m, int j) {
    Word w = interval_word(sys, m, j);
    std::reverse(w.begin(), w.end());
    int sb1 = sys.gen_sb1(), s1 = sys.gen_sigma(1);
    for (size_t a = 0; a + 1 < w.size(); ++a)
        if (w[a] == sb1 && w[a + 1] == s1) std::swap(w[a], w[a + 1]);
    return w;
}

// --- Stembridge forms ---------------------------------------------------

bool dform_valid(const CoxeterSystem& sys, const DForm& d) {
    int n = sys.n();
    int r = static_cast<int>(d.terms.size());
    int prev = n + 1;
    int lastpm = 0;
    for (auto& [m, nn] : d.terms) {
        if (nn < 1 || nn >= prev) return false;
        if (iabs(m) > nn) return false;
        prev = nn;
        // occurrences of s1 and sb1 in the word must alternate; a term
        // with m = 0 or m <= -2 contributes the pair s1 sb1
        if (m == 1 || m == -1) {
            if (m == lastpm) return false;
            lastpm = m;
        } else if (m <= 0) {
            if (lastpm == 1) return false;
            lastpm = -1;
        }
    }
    if (r <= 1) return true;
    // Case 1: a strictly decreasing prefix of entries >= 2, then only
    // alternating +-1 entries.
    bool ok1 = false;
    for (int s = 0; s <= r && !ok1; ++s) {
        bool good = true;
        for (int a = 0; a < s && good; ++a) {
            if (d.terms[a].first < 2) good = false;
            if (a > 0 && d.terms[a - 1].first <= d.terms[a].first) good = false;
        }
        for (int a = s; a < r && good; ++a)
            if (iabs(d.terms[a].first) != 1) good = false;
        ok1 = good;
    }
    // Case 2: entries >= 2 strictly decreasing until a final entry
    // m_r <= 0 with m_{r-1} > -m_r (and m_r != -1).
    bool ok2 = true;
    for (int a = 0; a < r - 1; ++a) {
        if (d.terms[a].first < 2) ok2 = false;
        if (a > 0 && d.terms[a - 1].first <= d.terms[a].first) ok2 = false;
    }
    int mr = d.terms[r - 1].first;
    if (!(mr <= 0 && mr != -1 && d.terms[r - 2].first > -mr)) ok2 = false;
    return ok1 || ok2;
}

Word dform_word(const CoxeterSystem& sys, const DForm& d) {
    Word w;
    for (auto& [m, nn] : d.terms) {
        Word part = interval_word(sys, m, nn);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

int dform_len(const DForm& d) {
    int len = 0;
    for (auto& [m, nn] : d.terms) len += interval_len(m, nn);
    return len;
}

DForm psi1_dform(const DForm& d) {
    DForm r = d;
    for (auto& [m, nn] : r.terms)
        if (m == 1 || m == -1) m = -m;
    return r;
}

std::vector<DForm> enumerate_dforms(const CoxeterSystem& sys, int max_len) {
    require_fork(sys);
    std::vector<DForm> out;
    DForm cur;
    std::function<void(int, int)> rec = [&](int max_n, int cur_len) {
        if (dform_valid(sys, cur)) out.push_back(cur);
        for (int nn = max_n; nn >= 1; --nn) {
            for (int m = -nn; m <= nn; ++m) {
                int tl = interval_len(m, nn);
                if (cur_len + tl > max_len) continue;
                cur.terms.push_back({m, nn});
                rec(nn - 1, cur_len + tl);
                cur.terms.pop_back();
            }
        }
    };
    rec(sys.n(), 0);
    return out;
}

// --- Shared predicates --------------------------------------------------

namespace {

// B-tilde affine-length-1 tail with prefix <i,n], 2 <= i <= n+1.
bool affine1B_tail_ok(const DForm& d, int i, int n) {
    for (int idx = 0; idx < static_cast<int>(d.terms.size()); ++idx) {
        int m = d.terms[idx].first;
        if (m == n - idx || iabs(m) < i) continue;
        return false;
    }
    return true;
}

// B-tilde affine-length-1 tail with prefix <i,n], i = +-1: a descending
// staircase (n,n),(n-1,n-1),... followed by a nonempty alternating +-1
// part starting with -i. The shape equal to <+-1,n]^{-1} (full staircase
// plus a single +-1 term) is carried by the inverse-interval encoding.
bool affine1B_pm1_tail_ok(const DForm& d, int i, int n) {
    int r = static_cast<int>(d.terms.size());
    int s = 0;
    while (s < r && d.terms[s].first == n - s && d.terms[s].second == n - s) ++s;
    if (s == r) return false;
    int want = -i;
    int prev = (s == 0) ? n + 1 : n - s + 1;
    for (int t = s; t < r; ++t) {
        auto [m, nn] = d.terms[t];
        if (m != want || nn < 1 || nn >= prev) return false;
        prev = nn;
        want = -want;
    }
    if (s == n - 1 && r == s + 1) return false;
    return true;
}

// Alternating +-1 staircase <s,r_1]<-s,r_2]... with decreasing r's.
bool is_alt_staircase(const DForm& d, int first_sign, int n) {
    int expect = first_sign, prev = n + 1;
    for (auto& [m, nn] : d.terms) {
        if (m != expect || nn < 1 || nn >= prev) return false;
        prev = nn;
        expect = -expect;
    }
    return true;
}

bool m1_bound_ok(const DForm& d, int bound) {
    return d.empty() || iabs(d.terms[0].first) < bound;
}

// D-tilde affine-length-1 tail with empty prefixes: a descending
// staircase (n,n),(n-1,n-1),... may precede the |m|-bounded part.
bool staircase_prefix_ok(const DForm& d, int jbound, int n) {
    int r = static_cast<int>(d.terms.size());
    int maxs = 0;
    while (maxs < r && d.terms[maxs].first == n - maxs && d.terms[maxs].second == n - maxs)
        ++maxs;
    for (int s = 0; s <= maxs; ++s)
        if (s == r || iabs(d.terms[s].first) < jbound) return true;
    return false;
}

bool tail_has_pm1(const DForm& d) {
    for (auto& [m, nn] : d.terms)
        if (m == 1 || m == -1) return true;
    return false;
}

bool left_descents_within(const CoxeterSystem& sys, const Word& w,
                          const std::vector<int>& allowed) {
    GroupElement x = element_of(sys, w);
    for (int s : descents(sys, x, Side::Left))
        if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) return false;
    return true;
}

[[noreturn]] void fail(const std::string& clause) { throw InvalidFormError(clause); }

void expect(bool cond, const char* clause) {
    if (!cond) fail(clause);
}

// Fields that must stay at their defaults outside their class.
void expect_clean(const FcForm& f, bool use_i, bool use_j, bool use_epseta, bool use_k,
                  bool use_f, bool use_h, bool use_j1, bool use_lists, bool use_psi1) {
    expect(use_i || f.i == 0, "unused field i must be 0");
    expect(use_j || f.j == 0, "unused field j must be 0");
    expect(use_epseta || (f.eps == 0 && f.eta == 0), "unused fields eps/eta must be 0");
    expect(use_k || f.k == 0, "unused field k must be 0");
    expect(use_f || f.f == 0, "unused field f must be 0");
    expect(use_h || f.h == 0, "unused field h must be 0");
    expect(use_j1 || f.j1 == 0, "unused field j1 must be 0");
    expect(use_lists || (f.is.empty() && f.js.empty()), "unused i/j lists must be empty");
    expect(use_psi1 || !f.psi1, "psi1 applies to D-tilde SecondType only");
}

void validate_B(const CoxeterSystem& sys, const FcForm& form) {
    int n = sys.n();
    switch (form.cls) {
        case FcClass::Finite:
            expect_clean(form, false, false, false, false, false, false, false, false, false);
            expect(form.tail_kind == TailKind::Stembridge, "Finite: tail must be a Stembridge form");
            expect(dform_valid(sys, form.tail), "Finite: invalid Stembridge form");
            return;
        case FcClass::AffineOne: {
            expect_clean(form, true, false, false, false, false,
                         form.tail_kind == TailKind::InverseInterval, false, false, false);
            int i = form.i;
            expect(i >= -n && i <= n + 1, "AffineOne: i out of range");
            if (i == 1 || i == -1) {
                if (form.tail_kind == TailKind::InverseInterval) {
                    expect(form.h >= -n && form.h <= n + 1, "AffineOne: h out of range");
                    expect(form.tail.empty(), "AffineOne: inverse-interval tail carries no terms");
                } else {
                    expect(!form.tail.empty(),
                           "AffineOne i=+-1: empty staircase is encoded as h=n+1");
                    expect(dform_valid(sys, form.tail), "AffineOne: invalid Stembridge tail");
                    expect(affine1B_pm1_tail_ok(form.tail, i, n),
                           "AffineOne i=+-1: staircase prefix then alternation starting -i");
                }
            } else if (i >= 2) {
                if (form.tail_kind == TailKind::InverseInterval) {
                    // Reversed intervals <h,n]^{-1} not expressible under
                    // the per-index rule below (those with h in [-n,-i]).
                    expect(form.h >= -n && form.h <= -i,
                           "AffineOne i>1: inverse-interval tail needs -n <= h <= -i");
                    expect(form.tail.empty(), "AffineOne: inverse-interval tail carries no terms");
                } else {
                    expect(dform_valid(sys, form.tail), "AffineOne: invalid Stembridge tail");
                    expect(affine1B_tail_ok(form.tail, i, n),
                           "AffineOne i>1: each m_j must equal n-j+1 or satisfy |m_j| < i");
                }
            } else { // i <= 0, i != -1
                expect(form.tail_kind == TailKind::InverseInterval,
                       "AffineOne i<=0: tail must be an inverse interval");
                expect(form.h >= -n && form.h <= n + 1, "AffineOne: h out of range");
                expect(form.tail.empty(), "AffineOne: inverse-interval tail carries no terms");
            }
            return;
        }
        case FcClass::FirstType:
            expect_clean(form, true, false, false, true, true, false, false, false, false);
            expect(form.k >= 1, "FirstType: k must be >= 1");
            expect(form.i >= -n && form.i <= n + 1, "FirstType: i out of range");
            expect(form.f >= -n && form.f <= n + 1, "FirstType: f out of range");
            expect(form.tail_kind == TailKind::Stembridge && form.tail.empty(),
                   "FirstType: no Stembridge tail");
            return;
        case FcClass::SecondType: {
            expect_clean(form, false, false, false, true, false, false, form.k > 0, true, false);
            expect(form.js.empty(), "SecondType B: alternating blocks are encoded by j1 and k");
            int p = static_cast<int>(form.is.size());
            expect(p + form.k >= 2, "SecondType: affine length p+k must be >= 2");
            expect(p <= n + 1, "SecondType: p exceeds n+1");
            if (p == 0) expect(form.k >= 2, "SecondType p=0: k must be >= 2");
            for (int s = 0; s + 1 < p; ++s) {
                expect(form.is[s] >= 2, "SecondType: i_s >= 2 for s < p");
                expect(form.is[s] <= n + 1, "SecondType: i_s out of range");
                if (s + 2 < p)
                    expect(form.is[s] > form.is[s + 1], "SecondType: i-chain must decrease");
            }
            if (p > 0) {
                int last = form.is[p - 1];
                expect(last <= n + 1 && last >= -n, "SecondType: i_p out of range");
                if (p >= 2)
                    expect(form.is[p - 2] > iabs(last), "SecondType: need i_{p-1} > |i_p|");
                expect(last != 1 && last != -1, "SecondType: i_p may not be +-1");
                if (last <= 0) {
                    expect(form.k == 0 && form.tail.empty(),
                           "SecondType i_p<=0: k=0 and empty tail required");
                    expect(last != -n, "SecondType: i_p may not be -n");
                } else if (form.k > 0) {
                    expect(last >= 2, "SecondType: i_p must exceed the alternating blocks");
                }
            }
            expect(form.tail_kind == TailKind::Stembridge,
                   "SecondType: tail must be a Stembridge form");
            if (form.k > 0) {
                expect(form.j1 == 1 || form.j1 == -1, "SecondType k>0: j1 must be +-1");
                int last_j = (form.k % 2 == 1) ? form.j1 : -form.j1;
                expect(is_alt_staircase(form.tail, -last_j, n),
                       "SecondType k>0: tail must alternate starting with -j_k");
            } else {
                int last = form.is[p - 1];
                if (last > 0) {
                    expect(dform_valid(sys, form.tail), "SecondType: invalid Stembridge tail");
                    expect(m1_bound_ok(form.tail, last), "SecondType k=0: need |m_1| < i_p");
                }
            }
            return;
        }
    }
}

void validate_D(const CoxeterSystem& sys, const FcForm& form) {
    int n = sys.n();
    switch (form.cls) {
        case FcClass::Finite:
            expect_clean(form, false, false, false, false, false, false, false, false, false);
            expect(form.tail_kind == TailKind::Stembridge, "Finite: tail must be a Stembridge form");
            expect(dform_valid(sys, form.tail), "Finite: invalid Stembridge form");
            return;
        case FcClass::AffineOne: {
            expect_clean(form, true, true, false, false, false,
                         form.tail_kind == TailKind::InverseInterval, false, false, false);
            int i = form.i, j = form.j;
            if (i == n + 1 && j == n) {
                expect(form.tail_kind == TailKind::Stembridge,
                       "AffineOne i=n+1,j=n: tail must be a Stembridge form");
                expect(dform_valid(sys, form.tail), "AffineOne: invalid Stembridge tail");
                return;
            }
            expect(iabs(j) <= n - 1, "AffineOne: need |j| <= n-1");
            expect(i == -1 || (i >= 1 && i <= n + 1), "AffineOne: i out of range");
            expect(iabs(j) < i || (j == -i && iabs(i) == 1),
                   "AffineOne: need |j| < i or j = -i = +-1");
            expect(!(i == 1 && j == 0), "AffineOne: i=1 with j=0 repeats sigma_1");
            if (iabs(j) == 1) {
                expect(form.tail_kind == TailKind::Stembridge,
                       "AffineOne |j|=1: tail must be a Stembridge form");
                expect(dform_valid(sys, form.tail), "AffineOne: invalid Stembridge tail");
                std::vector<int> allowed;
                allowed.push_back(j == 1 ? sys.gen_sb1() : sys.gen_sigma(1));
                if (i == n + 1) allowed.push_back(sys.gen_sigma(n));
                expect(left_descents_within(sys, dform_word(sys, form.tail), allowed),
                       "AffineOne |j|=1: tail left descents restricted to sigma_{-j} (and sigma_n)");
            } else if (j < -1 || j == 0) {
                if ((i == n && j == -(n - 1)) || i == n + 1) {
                    expect(form.tail_kind == TailKind::InverseInterval,
                           "AffineOne: tail must be an inverse interval here");
                    expect(form.h >= -n && form.h <= n + 1, "AffineOne: h out of range");
                    expect(form.tail.empty(), "AffineOne: inverse-interval tail carries no terms");
                } else {
                    expect(form.tail_kind == TailKind::Stembridge && form.tail.empty(),
                           "AffineOne j<-1 or j=0, i<=n: tail must be trivial");
                }
            } else { // j > 1
                if (i == n + 1 && form.tail_kind == TailKind::InverseInterval) {
                    // Reversed intervals <h,n]^{-1} not expressible under
                    // the staircase-prefix rule (those with h in [-n,-j]).
                    expect(form.h >= -n && form.h <= -j,
                           "AffineOne j>1: inverse-interval tail needs -n <= h <= -j");
                    expect(form.tail.empty(), "AffineOne: inverse-interval tail carries no terms");
                } else {
                    expect(form.tail_kind == TailKind::Stembridge,
                           "AffineOne j>1: tail must be a Stembridge form");
                    expect(dform_valid(sys, form.tail), "AffineOne: invalid Stembridge tail");
                    if (i <= n)
                        expect(m1_bound_ok(form.tail, j), "AffineOne j>1, i<=n: need |m_1| < j");
                    else
                        expect(staircase_prefix_ok(form.tail, j, n),
                               "AffineOne j>1, i=n+1: staircase prefix then |m| < j");
                }
            }
            return;
        }
        case FcClass::FirstType:
            expect_clean(form, true, false, true, true, true, false, false, false, false);
            expect(form.eps == 0 || form.eps == 1, "FirstType: eps must be 0 or 1");
            expect(form.eta == 0 || form.eta == 1, "FirstType: eta must be 0 or 1");
            expect(form.eps * form.eta == 0, "FirstType: eps and eta exclude each other");
            if (form.eps + form.eta > 0)
                expect(form.i == -(n - 1), "FirstType: eps/eta prefixes force i = -(n-1)");
            expect(form.i >= -(n - 1) && form.i <= n, "FirstType: i out of range");
            expect(form.f >= -n && form.f <= n + 1, "FirstType: f out of range");
            expect(form.k >= 0, "FirstType: k must be >= 0");
            expect(form.k + form.eps >= 1, "FirstType: affine length k+1+eps must be >= 2");
            expect(form.tail_kind == TailKind::Stembridge && form.tail.empty(),
                   "FirstType: no Stembridge tail");
            return;
        case FcClass::SecondType: {
            expect_clean(form, false, false, false, true, false, false, false, true, true);
            int p = static_cast<int>(form.is.size());
            expect(static_cast<int>(form.js.size()) == p,
                   "SecondType D: i and j lists must pair up");
            expect(p + form.k >= 2, "SecondType: affine length p+k must be >= 2");
            // p is bounded through the strict chain alone; the first pair
            // may be partially or fully empty (i_1 = n+1, j_1 up to n).
            if (p == 0) expect(form.k >= 2, "SecondType p=0: k must be >= 2");
            // chain n+1 >= i_1 > j_1 > i_2 > ... > i_p > |j_p| >= 0
            int prev = n + 2;
            for (int s = 0; s < p; ++s) {
                expect(form.is[s] < prev, "SecondType: chain must decrease");
                prev = form.is[s];
                if (s + 1 < p) {
                    expect(form.js[s] < prev, "SecondType: chain must decrease");
                    prev = form.js[s];
                }
            }
            expect(p == 0 || form.is[0] <= n + 1, "SecondType: i_1 out of range");
            int jp = p > 0 ? form.js[p - 1] : 0;
            if (p > 0) {
                expect(form.is[p - 1] > 1, "SecondType: i_p must exceed 1");
                expect(form.is[p - 1] > iabs(jp), "SecondType: need i_p > |j_p|");
                expect(jp >= -(n - 1), "SecondType: j_p out of range");
                expect(jp != -1, "SecondType: j_p may not be -1");
                if (jp <= 0) {
                    expect(form.k == 0 && form.tail.empty(),
                           "SecondType j_p<=0: k=0 and empty tail required");
                    expect(jp != -(n - 1), "SecondType: j_p may not be -(n-1)");
                }
            }
            expect(form.tail_kind == TailKind::Stembridge,
                   "SecondType: tail must be a Stembridge form");
            if (form.k > 0 || (p > 0 && jp == 1) || p == 0) {
                expect(is_alt_staircase(form.tail, -1, n),
                       "SecondType: tail must alternate starting with -1");
            } else if (p > 0 && jp > 1) {
                expect(dform_valid(sys, form.tail), "SecondType: invalid Stembridge tail");
                expect(m1_bound_ok(form.tail, jp), "SecondType k=0: need |m_1| < j_p");
            }
            if (form.psi1)
                expect(form.k > 0 || (p > 0 && jp == 1),
                       "SecondType psi1: the mirror must move the element");
            return;
        }
    }
}

} // namespace

void validate_form(const CoxeterSystem& sys, const FcForm& form) {
    if (form.family != sys.family) throw SystemMismatchError("form family differs from system");
    require_fork(sys);
    if (form.cls != FcClass::Finite) require_affine_grammar(sys);
    if (sys.family == Family::Btilde || sys.family == Family::D) {
        if (sys.family == Family::D)
            expect(form.cls == FcClass::Finite, "family D admits Finite forms only");
        validate_B(sys, form);
    } else {
        validate_D(sys, form);
    }
}

Word render_form(const CoxeterSystem& sys, const FcForm& form) {
    validate_form(sys, form);
    int n = sys.n();
    Word w;
    auto append = [&w](const Word& part) { w.insert(w.end(), part.begin(), part.end()); };
    auto tail_word = [&]() {
        if (form.tail_kind == TailKind::InverseInterval)
            return interval_word_inv(sys, form.h, n);
        return dform_word(sys, form.tail);
    };
    if (sys.family == Family::Btilde || sys.family == Family::D) {
        int t = sys.gen_t();
        switch (form.cls) {
            case FcClass::Finite:
                return dform_word(sys, form.tail);
            case FcClass::AffineOne:
                append(interval_word(sys, form.i, n));
                w.push_back(t);
                append(tail_word());
                return w;
            case FcClass::FirstType:
                append(interval_word(sys, -form.i, n));
                w.push_back(t);
                for (int a = 0; a < form.k; ++a) {
                    append(interval_word(sys, -n, n));
                    w.push_back(t);
                }
                append(interval_word_inv(sys, form.f, n));
                return w;
            case FcClass::SecondType:
                for (int v : form.is) {
                    append(interval_word(sys, v, n));
                    w.push_back(t);
                }
                for (int s = 0; s < form.k; ++s) {
                    int js = (s % 2 == 0) ? form.j1 : -form.j1;
                    append(interval_word(sys, js, n));
                    w.push_back(t);
                }
                append(dform_word(sys, form.tail));
                return w;
        }
    } else {
        int sbn = sys.gen_sbn();
        switch (form.cls) {
            case FcClass::Finite:
                return dform_word(sys, form.tail);
            case FcClass::AffineOne:
                append(interval_word(sys, form.i, n));
                append(interval_word(sys, form.j, n - 1));
                w.push_back(sbn);
                append(tail_word());
                return w;
            case FcClass::FirstType:
                if (form.eps) w.push_back(sbn);
                if (form.eta) w.push_back(sys.gen_sigma(n));
                append(interval_word(sys, form.i, n - 1));
                w.push_back(sbn);
                for (int a = 0; a < form.k; ++a) {
                    w.push_back(sys.gen_sigma(n));
                    append(interval_word(sys, -(n - 1), n - 1));
                    w.push_back(sbn);
                }
                append(interval_word_inv(sys, form.f, n));
                return w;
            case FcClass::SecondType:
                for (size_t s = 0; s < form.is.size(); ++s) {
                    append(interval_word(sys, form.is[s], n));
                    append(interval_word(sys, form.js[s], n - 1));
                    w.push_back(sbn);
                }
                for (int s = 0; s < form.k; ++s) {
                    append(interval_word(sys, -1, n));
                    append(interval_word(sys, 1, n - 1));
                    w.push_back(sbn);
                }
                append(dform_word(sys, form.tail));
                if (form.psi1) w = psi_word(sys, w, 1);
                return w;
        }
    }
    return w;
}

int form_affine_length(const FcForm& form) {
    switch (form.cls) {
        case FcClass::Finite: return 0;
        case FcClass::AffineOne: return 1;
        case FcClass::FirstType: return form.k + 1 + form.eps;
        case FcClass::SecondType: return static_cast<int>(form.is.size()) + form.k;
    }
    return 0;
}

// --- Enumeration --------------------------------------------------------

namespace {

// Alternating +-1 staircases of total length <= max_len, first sign fixed.
std::vector<DForm> staircases(int n, int first_sign, int max_len, bool include_empty) {
    std::vector<DForm> out;
    DForm cur;
    std::function<void(int, int)> rec = [&](int hi, int len) {
        if (!cur.empty() || include_empty) out.push_back(cur);
        for (int r = hi; r >= 1; --r) {
            if (len + r > max_len) continue;
            int sign = (cur.terms.size() % 2 == 0) ? first_sign : -first_sign;
            cur.terms.push_back({sign, r});
            rec(r - 1, len + r);
            cur.terms.pop_back();
        }
    };
    rec(n, 0);
    return out;
}

struct Emitter {
    const CoxeterSystem& sys;
    int max_len;
    int max_affine;
    size_t budget;
    std::vector<std::pair<FcForm, Word>>& out;

    void operator()(const FcForm& f) {
        Word w = render_form(sys, f); // validates; a throw here is a bug
        if (static_cast<int>(w.size()) > max_len) return;
        if (form_affine_length(f) > max_affine) return;
        out.push_back({f, w});
        if (out.size() > budget) throw BudgetError("enumerate_fc budget exceeded");
    }
};

void enumerate_B(const CoxeterSystem& sys, int max_len, int max_affine,
                 const std::vector<DForm>& dfs, Emitter& emit) {
    int n = sys.n();
    FcForm base;
    base.family = sys.family;
    // Affine length 1.
    if (max_affine >= 1) {
        for (int i = -n; i <= n + 1; ++i) {
            int plen = interval_len(i, n) + 1;
            if (plen > max_len) continue;
            int rem = max_len - plen;
            FcForm f = base;
            f.cls = FcClass::AffineOne;
            f.i = i;
            if (i >= 2) {
                for (const DForm& d : dfs) {
                    if (dform_len(d) > rem || !affine1B_tail_ok(d, i, n)) continue;
                    f.tail = d;
                    emit(f);
                }
                FcForm g = base;
                g.cls = FcClass::AffineOne;
                g.i = i;
                g.tail_kind = TailKind::InverseInterval;
                for (int h = -n; h <= -i; ++h) {
                    if (interval_len(h, n) > rem) continue;
                    g.h = h;
                    emit(g);
                }
            } else {
                f.tail_kind = TailKind::InverseInterval;
                for (int h = -n; h <= n + 1; ++h) {
                    if (interval_len(h, n) > rem) continue;
                    f.h = h;
                    emit(f);
                }
                if (i == 1 || i == -1) {
                    FcForm g = base;
                    g.cls = FcClass::AffineOne;
                    g.i = i;
                    for (const DForm& d : dfs) {
                        if (dform_len(d) > rem || !affine1B_pm1_tail_ok(d, i, n)) continue;
                        g.tail = d;
                        emit(g);
                    }
                }
            }
        }
    }
    // First type.
    int core = 2 * n + 1;
    for (int k = 1; k + 1 <= max_affine && 1 + k * core <= max_len + 2 * n; ++k) {
        for (int i = -n; i <= n + 1; ++i) {
            for (int fpar = -n; fpar <= n + 1; ++fpar) {
                int len = interval_len(-i, n) + 1 + k * core + interval_len(fpar, n);
                if (len > max_len) continue;
                FcForm f = base;
                f.cls = FcClass::FirstType;
                f.i = i;
                f.k = k;
                f.f = fpar;
                emit(f);
            }
        }
    }
    // Second type.
    auto close_chain = [&](const std::vector<int>& pre, int base_len) {
        int p_pre = static_cast<int>(pre.size());
        int minv = pre.empty() ? n + 2 : pre.back();
        // k = 0 closings need p >= 2.
        if (p_pre >= 1 && p_pre + 1 <= max_affine) {
            for (int last = 2; last < minv && last <= n + 1; ++last) {
                int blen = base_len + interval_len(last, n) + 1;
                if (blen > max_len) continue;
                FcForm f = base;
                f.cls = FcClass::SecondType;
                f.is = pre;
                f.is.push_back(last);
                for (const DForm& d : dfs) {
                    if (blen + dform_len(d) > max_len || !m1_bound_ok(d, last)) continue;
                    f.tail = d;
                    emit(f);
                }
            }
            for (int last = 0; last >= -(n - 1); --last) {
                if (last == -1 || last == -n || iabs(last) >= minv) continue;
                int blen = base_len + interval_len(last, n) + 1;
                if (blen > max_len) continue;
                FcForm f = base;
                f.cls = FcClass::SecondType;
                f.is = pre;
                f.is.push_back(last);
                emit(f);
            }
        }
        // k >= 1 closings with a final positive i_p >= 2.
        for (int last = 2; last < minv && last <= n + 1; ++last) {
            int blen = base_len + interval_len(last, n) + 1;
            int p = p_pre + 1;
            for (int k = std::max(1, 2 - p); p + k <= max_affine; ++k) {
                int klen = blen + k * (n + 1);
                if (klen > max_len) break;
                for (int j1 : {1, -1}) {
                    int last_j = (k % 2 == 1) ? j1 : -j1;
                    FcForm f = base;
                    f.cls = FcClass::SecondType;
                    f.is = pre;
                    f.is.push_back(last);
                    f.k = k;
                    f.j1 = j1;
                    for (const DForm& st : staircases(n, -last_j, max_len - klen, true)) {
                        f.tail = st;
                        emit(f);
                    }
                }
            }
        }
    };
    std::vector<int> pre;
    std::function<void(int, int)> rec = [&](int hi, int base_len) {
        close_chain(pre, base_len);
        if (static_cast<int>(pre.size()) + 1 >= std::min(n + 1, max_affine)) return;
        for (int v = std::min(hi, n + 1); v >= 2; --v) {
            int add = interval_len(v, n) + 1;
            if (base_len + add > max_len) continue;
            pre.push_back(v);
            rec(v - 1, base_len + add);
            pre.pop_back();
        }
    };
    rec(n + 1, 0);
    // p = 0: k >= 2 alternating blocks only.
    for (int k = 2; k <= max_affine && k * (n + 1) <= max_len; ++k) {
        for (int j1 : {1, -1}) {
            int last_j = (k % 2 == 1) ? j1 : -j1;
            FcForm f = base;
            f.cls = FcClass::SecondType;
            f.k = k;
            f.j1 = j1;
            for (const DForm& st : staircases(n, -last_j, max_len - k * (n + 1), true)) {
                f.tail = st;
                emit(f);
            }
        }
    }
}

void enumerate_D(const CoxeterSystem& sys, int max_len, int max_affine,
                 const std::vector<DForm>& dfs, Emitter& emit) {
    int n = sys.n();
    FcForm base;
    base.family = sys.family;
    // Affine length 1.
    if (max_affine >= 1) {
        {
            FcForm f = base;
            f.cls = FcClass::AffineOne;
            f.i = n + 1;
            f.j = n;
            for (const DForm& d : dfs) {
                if (1 + dform_len(d) > max_len) continue;
                f.tail = d;
                emit(f);
            }
        }
        for (int j = -(n - 1); j <= n - 1; ++j) {
            for (int i = -1; i <= n + 1; ++i) {
                if (i == 0) continue;
                if (!(iabs(j) < i || (j == -i && iabs(i) == 1))) continue;
                if (i == 1 && j == 0) continue;
                int plen = interval_len(i, n) + interval_len(j, n - 1) + 1;
                if (plen > max_len) continue;
                int rem = max_len - plen;
                FcForm f = base;
                f.cls = FcClass::AffineOne;
                f.i = i;
                f.j = j;
                if (iabs(j) == 1) {
                    std::vector<int> allowed;
                    allowed.push_back(j == 1 ? sys.gen_sb1() : sys.gen_sigma(1));
                    if (i == n + 1) allowed.push_back(sys.gen_sigma(n));
                    for (const DForm& d : dfs) {
                        if (dform_len(d) > rem) continue;
                        if (!left_descents_within(sys, dform_word(sys, d), allowed)) continue;
                        f.tail = d;
                        emit(f);
                    }
                } else if (j < -1 || j == 0) {
                    if ((i == n && j == -(n - 1)) || i == n + 1) {
                        f.tail_kind = TailKind::InverseInterval;
                        for (int h = -n; h <= n + 1; ++h) {
                            if (interval_len(h, n) > rem) continue;
                            f.h = h;
                            emit(f);
                        }
                    } else {
                        emit(f);
                    }
                } else { // j > 1
                    for (const DForm& d : dfs) {
                        if (dform_len(d) > rem) continue;
                        if (i <= n ? !m1_bound_ok(d, j) : !staircase_prefix_ok(d, j, n)) continue;
                        f.tail = d;
                        emit(f);
                    }
                    if (i == n + 1) {
                        FcForm g = base;
                        g.cls = FcClass::AffineOne;
                        g.i = i;
                        g.j = j;
                        g.tail_kind = TailKind::InverseInterval;
                        for (int h = -n; h <= -j; ++h) {
                            if (interval_len(h, n) > rem) continue;
                            g.h = h;
                            emit(g);
                        }
                    }
                }
            }
        }
    }
    // First type.
    int core = 2 * n; // sigma_n <-(n-1),n-1] sbn
    for (int eps = 0; eps <= 1; ++eps) {
        for (int eta = 0; eta <= 1 - eps; ++eta) {
            int ilo = (eps + eta > 0) ? -(n - 1) : -(n - 1);
            int ihi = (eps + eta > 0) ? -(n - 1) : n;
            for (int i = ilo; i <= ihi; ++i) {
                for (int k = std::max(0, 1 - eps); k + 1 + eps <= max_affine; ++k) {
                    int blen = eps + eta + interval_len(i, n - 1) + 1 + k * core;
                    if (blen > max_len) break;
                    for (int fpar = -n; fpar <= n + 1; ++fpar) {
                        if (blen + interval_len(fpar, n) > max_len) continue;
                        FcForm f = base;
                        f.cls = FcClass::FirstType;
                        f.eps = eps;
                        f.eta = eta;
                        f.i = i;
                        f.k = k;
                        f.f = fpar;
                        emit(f);
                    }
                }
            }
        }
    }
    // Second type.
    int kblock = 2 * n; // <-1,n] <1,n-1] sbn
    auto close_pairs = [&](const std::vector<int>& pis, const std::vector<int>& pjs,
                           int base_len) {
        // add a final pair (i_p, j_p)
        int minv = pjs.empty() ? n + 2 : pjs.back();
        for (int ip = 2; ip < minv && ip <= n + 1; ++ip) {
            int ilen = base_len + interval_len(ip, n);
            for (int jp = -(n - 1); jp < ip; ++jp) {
                if (iabs(jp) >= ip) continue;
                int blen = ilen + interval_len(jp, n - 1) + 1;
                if (blen > max_len) continue;
                int p = static_cast<int>(pis.size()) + 1;
                FcForm f = base;
                f.cls = FcClass::SecondType;
                f.is = pis;
                f.is.push_back(ip);
                f.js = pjs;
                f.js.push_back(jp);
                auto emit_both = [&](FcForm& g) {
                    if (g.js[p - 1] != -1) {
                        g.psi1 = false;
                        emit(g);
                    }
                    bool movable = g.k > 0 || g.js[p - 1] == 1;
                    if (movable) {
                        g.psi1 = true;
                        emit(g);
                        g.psi1 = false;
                    }
                };
                if (jp <= 0) {
                    if (jp == -(n - 1) || p + 0 < 2) continue;
                    emit_both(f);
                } else if (jp > 1) {
                    // k = 0 with bounded Stembridge tail
                    if (p >= 2) {
                        for (const DForm& d : dfs) {
                            if (blen + dform_len(d) > max_len || !m1_bound_ok(d, jp)) continue;
                            f.tail = d;
                            emit_both(f);
                        }
                        f.tail = DForm{};
                    }
                    // k >= 1 with alternating staircase tail
                    for (int k = std::max(1, 2 - p); p + k <= max_affine; ++k) {
                        int klen = blen + k * kblock;
                        if (klen > max_len) break;
                        f.k = k;
                        for (const DForm& st : staircases(n, -1, max_len - klen, true)) {
                            f.tail = st;
                            emit_both(f);
                        }
                        f.tail = DForm{};
                    }
                    f.k = 0;
                } else { // jp == 1
                    for (int k = std::max(0, 2 - p); p + k <= max_affine; ++k) {
                        int klen = blen + k * kblock;
                        if (klen > max_len) break;
                        f.k = k;
                        for (const DForm& st : staircases(n, -1, max_len - klen, true)) {
                            f.tail = st;
                            emit_both(f);
                        }
                        f.tail = DForm{};
                    }
                    f.k = 0;
                }
            }
        }
    };
    std::vector<int> pis, pjs;
    std::function<void(int)> rec = [&](int base_len) {
        close_pairs(pis, pjs, base_len);
        int p_next = static_cast<int>(pis.size()) + 2;
        if (p_next > max_affine) return;
        int minv = pjs.empty() ? n + 2 : pjs.back();
        for (int iv = 4; iv < minv && iv <= n + 1; ++iv) {
            for (int jv = 3; jv < iv; ++jv) {
                int add = interval_len(iv, n) + interval_len(jv, n - 1) + 1;
                if (base_len + add > max_len) continue;
                pis.push_back(iv);
                pjs.push_back(jv);
                rec(base_len + add);
                pis.pop_back();
                pjs.pop_back();
            }
        }
    };
    rec(0);
    // p = 0: k >= 2.
    for (int k = 2; k <= max_affine && k * kblock <= max_len; ++k) {
        FcForm f = base;
        f.cls = FcClass::SecondType;
        f.k = k;
        for (const DForm& st : staircases(n, -1, max_len - k * kblock, true)) {
            f.tail = st;
            f.psi1 = false;
            emit(f);
            f.psi1 = true;
            emit(f);
        }
    }
}

} // namespace

std::vector<std::pair<FcForm, Word>> enumerate_fc(const CoxeterSystem& sys, int max_len,
                                                  int max_affine, size_t budget) {
    require_fork(sys);
    if (max_len < 0 || max_affine < 0) throw DomainError("enumeration bounds must be >= 0");
    std::vector<std::pair<FcForm, Word>> out;
    Emitter emit{sys, max_len, max_affine, budget, out};
    std::vector<DForm> dfs = enumerate_dforms(sys, max_len);
    FcForm fin;
    fin.family = sys.family;
    fin.cls = FcClass::Finite;
    for (const DForm& d : dfs) {
        fin.tail = d;
        emit(fin);
    }
    if (sys.family != Family::D) {
        require_affine_grammar(sys);
        if (sys.family == Family::Btilde)
            enumerate_B(sys, max_len, max_affine, dfs, emit);
        else
            enumerate_D(sys, max_len, max_affine, dfs, emit);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int la = form_affine_length(a.first), lb = form_affine_length(b.first);
        if (la != lb) return la < lb;
        return shortlex_less(a.second, b.second);
    });
    return out;
}

// --- Parsing ------------------------------------------------------------

namespace {

struct FormIndex {
    int built_len = -1;
    std::map<std::vector<QuadInt>, std::vector<FcForm>> by_mat;
};

std::map<std::pair<int, int>, FormIndex> g_form_index;
std::map<std::pair<int, int>, FormIndex> g_dform_index; // Finite forms only
std::mutex g_index_mutex;

FormIndex& ensure_form_index(const CoxeterSystem& sys, int len) {
    auto key = std::make_pair(static_cast<int>(sys.family), sys.rank);
    FormIndex& idx = g_form_index[key];
    if (idx.built_len < len) {
        idx.by_mat.clear();
        for (auto& [form, word] : enumerate_fc(sys, len, len))
            idx.by_mat[element_of(sys, word).mat].push_back(form);
        idx.built_len = len;
    }
    return idx;
}

FormIndex& ensure_dform_index(const CoxeterSystem& sys, int len) {
    auto key = std::make_pair(static_cast<int>(sys.family), sys.rank);
    FormIndex& idx = g_dform_index[key];
    if (idx.built_len < len) {
        idx.by_mat.clear();
        for (const DForm& d : enumerate_dforms(sys, len)) {
            FcForm f;
            f.family = sys.family;
            f.cls = FcClass::Finite;
            f.tail = d;
            idx.by_mat[element_of(sys, dform_word(sys, d)).mat].push_back(f);
        }
        idx.built_len = len;
    }
    return idx;
}

void require_parabolic(const CoxeterSystem& sys, const Word& w) {
    int excluded = sys.affine_gen();
    if (excluded < 0) return;
    for (int s : w)
        if (s == excluded)
            throw DomainError("element lies outside the finite type-D parabolic");
}

} // namespace

FcForm parse_form(const CoxeterSystem& sys, const GroupElement& x) {
    require_fork(sys);
    if (sys.family != Family::D) require_affine_grammar(sys);
    if (!is_fully_commutative(sys, x)) throw NotFCError("element is not fully commutative");
    int l = length(sys, x);
    std::lock_guard<std::mutex> lock(g_index_mutex);
    FormIndex& idx = ensure_form_index(sys, l);
    auto it = idx.by_mat.find(x.mat);
    size_t count = (it == idx.by_mat.end()) ? 0 : it->second.size();
    if (count != 1)
        throw InvalidFormError("expected exactly one matching normal form, found " +
                               std::to_string(count));
    return it->second.front();
}

FcForm parse_B(const CoxeterSystem& sys, const GroupElement& x) {
    if (sys.family != Family::Btilde) throw SystemMismatchError("parse_B needs a B-tilde system");
    return parse_form(sys, x);
}

FcForm parse_D(const CoxeterSystem& sys, const GroupElement& x) {
    if (sys.family != Family::Dtilde) throw SystemMismatchError("parse_D needs a D-tilde system");
    return parse_form(sys, x);
}

Word render_B(const CoxeterSystem& sys, const FcForm& form) {
    if (sys.family != Family::Btilde) throw SystemMismatchError("render_B needs a B-tilde system");
    return render_form(sys, form);
}

Word render_D(const CoxeterSystem& sys, const FcForm& form) {
    if (sys.family != Family::Dtilde) throw SystemMismatchError("render_D needs a D-tilde system");
    return render_form(sys, form);
}

DForm parse_finite_D(const CoxeterSystem& sys, const GroupElement& x) {
    require_fork(sys);
    if (!is_fully_commutative(sys, x)) throw NotFCError("element is not fully commutative");
    Word w = canonical_word(sys, x);
    require_parabolic(sys, w);
    std::lock_guard<std::mutex> lock(g_index_mutex);
    FormIndex& idx = ensure_dform_index(sys, static_cast<int>(w.size()));
    auto it = idx.by_mat.find(x.mat);
    size_t count = (it == idx.by_mat.end()) ? 0 : it->second.size();
    if (count != 1)
        throw InvalidFormError("expected exactly one Stembridge form, found " +
                               std::to_string(count));
    return it->second.front().tail;
}

bool extremal(const CoxeterSystem& sys, const GroupElement& x, ExtremalKind kind) {
    require_fork(sys);
    if (!is_fully_commutative(sys, x)) throw NotFCError("element is not fully commutative");
    Word w = canonical_word(sys, x);
    require_parabolic(sys, w);
    int n = sys.n();
    if (kind == ExtremalKind::B) return count_occurrences(w, sys.gen_sigma(n)) >= 1;
    return count_occurrences(w, sys.gen_sigma(n - 1)) >= 2;
}

Word psi_word(const CoxeterSystem& sys, const Word& w, int which) {
    check_word(sys, w);
    int a, b;
    if (which == 1) {
        require_fork(sys);
        a = sys.gen_sb1();
        b = sys.gen_sigma(1);
    } else if (which == sys.n() && sys.family == Family::Dtilde) {
        a = sys.gen_sbn();
        b = sys.gen_sigma(sys.n());
    } else {
        throw DomainError("psi supports which=1 (fork) and which=n (D-tilde only)");
    }
    Word r = w;
    for (int& s : r) {
        if (s == a) s = b;
        else if (s == b) s = a;
    }
    return r;
}

GroupElement psi_element(const CoxeterSystem& sys, const GroupElement& x, int which) {
    return element_of(sys, psi_word(sys, canonical_word(sys, x), which));
}

} // namespace fc
