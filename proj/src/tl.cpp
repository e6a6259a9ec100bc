/*
 * tl.cpp
 * ------
 * Temperley-Lieb reduction engine on the fully commutative basis, the
 * induced morphisms Qn and Pn, and the leading-term expansion reports.
 */
#include "fc/tl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

#include "fc/errors.hpp"
#include "fc/towers.hpp"

namespace fc {

namespace {

LaurentPoly q_minus_one() {
    return LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 0);
}

bool ends_with(const Word& w, const Word& suffix) {
    if (w.size() < suffix.size()) return false;
    return std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

// The alternating (s,t)-suffix of length m-1 ending with t.
Word braid_suffix(int s, int t, int m) {
    Word suf(m - 1);
    for (int r = 0; r < m - 1; ++r) suf[m - 2 - r] = (r % 2 == 0) ? t : s;
    return suf;
}

// All alternating {s,t}-words of length < m: the replacement monomials
// of V (m = 3) or Z (m = 4), each carrying coefficient -1.
std::vector<Word> braid_replacements(int s, int t, int m) {
    std::vector<Word> out{{}};
    for (int len = 1; len < m; ++len)
        for (int first : {s, t}) {
            Word w(len);
            for (int r = 0; r < len; ++r)
                w[r] = (r % 2 == 0) ? first : (first == s ? t : s);
            out.push_back(std::move(w));
        }
    return out;
}

struct BraidTail {
    Word prefix;    // before the alternating suffix
    Word commuting; // after it; every letter commutes with s
    int t = -1;
    int m = 0;
};

// Finds a word in the commutation class of the reduced fc word u of
// the shape  prefix . suffix . commuting-block  where the alternating
// (s,t)-suffix of length m-1 announces the braid created by a right
// multiplication with s, and the trailing block commutes with s
// letterwise (s slides left through it). Existence is an internal
// invariant of case C (u fc, us reduced but not fc).
BraidTail find_braid_tail(const CoxeterSystem& sys, const Word& u, int s) {
    std::vector<std::pair<int, Word>> targets; // (t, suffix)
    for (int t = 0; t < sys.rank; ++t) {
        int m = sys.m(s, t);
        if (t != s && m >= 3) targets.emplace_back(t, braid_suffix(s, t, m));
    }

    std::set<Word> seen{u};
    std::deque<Word> queue{u};
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        size_t head = w.size();
        while (head > 0 && sys.commutes(w[head - 1], s)) --head;
        Word stem(w.begin(), w.begin() + head);
        for (auto& [t, suf] : targets)
            if (ends_with(stem, suf)) {
                BraidTail out;
                out.prefix.assign(stem.begin(), stem.end() - suf.size());
                out.commuting.assign(w.begin() + head, w.end());
                out.t = t;
                out.m = sys.m(s, t);
                return out;
            }
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (sys.commutes(w[i], w[i + 1])) {
                std::swap(w[i], w[i + 1]);
                if (seen.insert(w).second) queue.push_back(w);
                std::swap(w[i], w[i + 1]);
            }
    }
    assert(false && "braid tail not found for a non-fc right extension");
    return {};
}

LinComb basis_times_gen(const CoxeterSystem& sys, const Word& u, int s);

LinComb lin_times_gen(const CoxeterSystem& sys, const LinComb& body, int s) {
    LinComb out;
    for (const auto& [w, c] : body.terms)
        out += basis_times_gen(sys, w, s).scaled(c);
    return out;
}

LinComb basis_times_gen(const CoxeterSystem& sys, const Word& u, int s) {
    LinComb out;
    GroupElement x = element_of(sys, u);
    GroupElement g = GroupElement::generator(sys, s);
    if (x.right_descent(s)) {
        // Quotients of fully commutative elements stay fully commutative.
        out.add(canonical_word(sys, x * g), LaurentPoly::q_power(1));
        out.add(u, q_minus_one());
        return out;
    }
    GroupElement y = x * g;
    if (is_fully_commutative(sys, y)) {
        out.add(canonical_word(sys, y), LaurentPoly::one());
        return out;
    }
    // Case C: locate the braid at the end of a commutation-equivalent
    // word and replace the braid monomial through V = 0 or Z = 0. All
    // replacement monomials are strictly shorter, so this terminates.
    BraidTail tail = find_braid_tail(sys, canonical_word(sys, x), s);
    for (const Word& rep : braid_replacements(s, tail.t, tail.m)) {
        LinComb acc;
        acc.add(canonical_word(sys, element_of(sys, tail.prefix)),
                LaurentPoly::one());
        for (int letter : rep) acc = lin_times_gen(sys, acc, letter);
        for (int letter : tail.commuting) acc = lin_times_gen(sys, acc, letter);
        out += acc.scaled(-LaurentPoly::one());
    }
    return out;
}

CoxeterSystem tl_map_family(AlgebraMapId id, int n, bool target) {
    if (id == AlgebraMapId::Rn)
        throw DomainError("the Temperley-Lieb tower maps are Qn and Pn");
    Family fam = id == AlgebraMapId::Qn ? Family::Btilde : Family::Dtilde;
    return build_system(fam, n + 1 + (target ? 1 : 0));
}

} // namespace

bool TLElt::operator==(const TLElt& o) const {
    return system == o.system && body == o.body;
}

TLElt tl_zero(const CoxeterSystem& sys) { return TLElt{sys, {}}; }

TLElt tl_one(const CoxeterSystem& sys) {
    TLElt t{sys, {}};
    t.body.add({}, LaurentPoly::one());
    return t;
}

TLElt tl_basis(const CoxeterSystem& sys, const Word& w) {
    GroupElement x = element_of(sys, w);
    if (!is_fully_commutative(sys, x))
        throw NotFCError("basis keys must be fully commutative");
    TLElt t{sys, {}};
    t.body.add(canonical_word(sys, x), LaurentPoly::one());
    return t;
}

TLElt tl_add(const TLElt& a, const TLElt& b) {
    if (!(a.system == b.system)) throw SystemMismatchError("tl_add");
    return TLElt{a.system, a.body + b.body};
}

TLElt tl_scale(const LaurentPoly& c, const TLElt& t) {
    return TLElt{t.system, t.body.scaled(c)};
}

TLElt mult_right_gen(const TLElt& t, int s) {
    check_word(t.system, {s});
    return TLElt{t.system, lin_times_gen(t.system, t.body, s)};
}

TLElt reduce_word(const CoxeterSystem& sys, const Word& w) {
    check_word(sys, w);
    TLElt out = tl_one(sys);
    for (int s : w) out = mult_right_gen(out, s);
    return out;
}

TLElt mult(const TLElt& a, const TLElt& b) {
    if (!(a.system == b.system)) throw SystemMismatchError("tl mult");
    TLElt out = tl_zero(a.system);
    for (const auto& [w, c] : b.body.terms) {
        LinComb acc = a.body;
        for (int s : w) acc = lin_times_gen(a.system, acc, s);
        out.body += acc.scaled(c);
    }
    return out;
}

TLElt tl_gen_inverse(const CoxeterSystem& sys, int s) {
    check_word(sys, {s});
    TLElt t{sys, {}};
    t.body.add({s}, LaurentPoly::q_power(-1));
    t.body.add({}, LaurentPoly::q_power(-1) - LaurentPoly::one());
    return t;
}

TLElt tl_morphism_image(AlgebraMapId id, int n, const Word& w) {
    CoxeterSystem src = tl_map_family(id, n, false);
    CoxeterSystem dst = tl_map_family(id, n, true);
    GroupElement x = element_of(src, w);
    if (!is_fully_commutative(src, x))
        throw DomainError("tl_morphism_image needs a fully commutative element");

    int affine = id == AlgebraMapId::Pn ? src.gen_sbn() : src.gen_t();
    int sn = dst.gen_sigma(n);
    TLElt affine_img = tl_zero(dst);
    if (id == AlgebraMapId::Pn) {
        int sm = dst.gen_sigma(n - 1);
        affine_img = reduce_word(dst, {sn, sm, dst.gen_sbn()});
        affine_img = mult(affine_img, tl_gen_inverse(dst, sm));
        affine_img = mult(affine_img, tl_gen_inverse(dst, sn));
    } else {
        affine_img = reduce_word(dst, {sn, dst.gen_t()});
        affine_img = mult(affine_img, tl_gen_inverse(dst, sn));
    }

    TLElt out = tl_one(dst);
    for (int s : canonical_word(src, x)) {
        if (s == affine) {
            out = mult(out, affine_img);
        } else {
            Word img = parse_word(dst, src.tokens[s]);
            out = mult_right_gen(out, img[0]);
        }
    }
    return out;
}

LeadingDecomposition tl_leading_terms(const TLElt& t) {
    LeadingDecomposition out;
    if (t.body.is_zero()) return out;
    int max_aff = -1, max_len = -1;
    for (const auto& [w, c] : t.body.terms) {
        int L = affine_length_of_word(t.system, w);
        int l = static_cast<int>(w.size());
        if (L > max_aff || (L == max_aff && l > max_len)) {
            max_aff = L;
            max_len = l;
        }
    }
    out.max_affine = max_aff;
    for (const auto& [w, c] : t.body.terms) {
        int L = affine_length_of_word(t.system, w);
        if (L == max_aff && static_cast<int>(w.size()) == max_len)
            out.top.add(w, c);
        else
            out.rest.add(w, c);
    }
    return out;
}

CheckReport check_tl_relations(const CoxeterSystem& sys) {
    CheckReport rep;
    TLElt one = tl_one(sys);
    LaurentPoly qm1 = q_minus_one();

    for (int s = 0; s < sys.rank; ++s) {
        TLElt lhs = reduce_word(sys, {s, s});
        TLElt rhs = tl_add(tl_scale(qm1, tl_basis(sys, {s})),
                           tl_scale(LaurentPoly::q_power(1), one));
        ++rep.checked;
        if (!(lhs == rhs))
            rep.fail("quadratic relation fails for " + sys.tokens[s]);
    }

    for (int s = 0; s < sys.rank; ++s) {
        for (int t = s + 1; t < sys.rank; ++t) {
            int m = sys.m(s, t);
            // Braid equality through the engine.
            Word left, right;
            for (int r = 0; r < m; ++r) {
                left.push_back(r % 2 == 0 ? s : t);
                right.push_back(r % 2 == 0 ? t : s);
            }
            ++rep.checked;
            if (!(reduce_word(sys, left) == reduce_word(sys, right)))
                rep.fail("braid relation fails for " + sys.tokens[s] + ", " +
                         sys.tokens[t]);
            if (m < 3) continue;
            // V = 0 (m = 3) or Z = 0 (m = 4): the sum over all
            // alternating monomials of length <= m vanishes.
            TLElt sum = tl_zero(sys);
            sum = tl_add(sum, reduce_word(sys, left));
            for (const Word& rep_word : braid_replacements(s, t, m))
                sum = tl_add(sum, reduce_word(sys, rep_word));
            ++rep.checked;
            if (!sum.body.is_zero())
                rep.fail((m == 3 ? std::string("V(") : std::string("Z(")) +
                         sys.tokens[s] + ", " + sys.tokens[t] +
                         ") does not vanish");
        }
    }
    return rep;
}

CheckReport check_faithful(AlgebraMapId id, int n, int max_len) {
    CoxeterSystem src = tl_map_family(id, n, false);
    CheckReport rep;
    std::vector<LinComb> bodies;
    for (auto& [x, word] : enumerate_ball(src, max_len)) {
        if (!is_fully_commutative(src, x)) continue;
        bodies.push_back(tl_morphism_image(id, n, word).body);
        ++rep.checked;
    }
    if (!check_independent(bodies))
        rep.fail("images of the fully commutative basis are dependent");
    return rep;
}

bool is_in_image_I(int n, const GroupElement& x) {
    CoxeterSystem src = build_system(Family::Dtilde, n + 1);
    CoxeterSystem dst = build_system(Family::Dtilde, n + 2);
    if (!is_fully_commutative(dst, x) || affine_length(dst, x) != 1)
        return false;
    FcForm f = parse_form(dst, x);
    if (f.cls != FcClass::AffineOne) return false;
    int sn = src.n(); // top plain generator index of the source

    // The tail of the target form as a word.
    Word tail_word = f.tail_kind == TailKind::Stembridge
                         ? dform_word(dst, f.tail)
                         : interval_word_inv(dst, f.h, dst.n());

    // A candidate source word is accepted iff it is a reduced fully
    // commutative word of affine length 1 whose form maps to x.
    auto accept = [&](const Word& cand) {
        if (!is_reduced(src, cand)) return false;
        GroupElement y = element_of(src, cand);
        if (!is_fully_commutative(src, y)) return false;
        if (affine_length(src, y) != 1) return false;
        FcForm g = parse_form(src, y);
        GroupElement img = element_of(dst, render_form(dst, map_I(src, g)));
        return img == x;
    };

    // Translate a word of the target's finite parabolic down one rank;
    // fails when the top generators appear.
    auto translate = [&](const Word& w, Word& out) {
        out.clear();
        for (int letter : w) {
            if (letter == dst.gen_sigma(dst.n()) || letter == dst.gen_sbn())
                return false;
            out.push_back(parse_word(src, dst.tokens[letter])[0]);
        }
        return true;
    };

    // Branch 1: parameters project down unchanged.
    if (std::abs(f.i) <= sn + 1 && std::abs(f.j) <= sn) {
        Word cand = interval_word(src, f.i, sn);
        Word second = interval_word(src, f.j, sn - 1);
        cand.insert(cand.end(), second.begin(), second.end());
        cand.push_back(src.gen_sbn());
        Word tl;
        if (translate(tail_word, tl)) {
            cand.insert(cand.end(), tl.begin(), tl.end());
            if (accept(cand)) return true;
        }
    }

    // Branch 2: empty leading interval upstairs comes from an empty
    // leading interval downstairs with the new generator absorbed into
    // the tail.
    if (std::abs(f.i) == dst.n() + 1 && std::abs(f.j) <= sn) {
        GroupElement u = element_of(dst, tail_word);
        int top = dst.gen_sigma(dst.n());
        if (u.left_descent(top)) {
            Word stripped =
                canonical_word(dst, GroupElement::generator(dst, top) * u);
            Word tl;
            if (translate(stripped, tl)) {
                Word cand = interval_word(src, f.j, sn - 1);
                cand.push_back(src.gen_sbn());
                cand.insert(cand.end(), tl.begin(), tl.end());
                if (accept(cand)) return true;
            }
        }
    }

    // Branch 3: the reversed-interval family whose image also has an
    // empty leading interval; its parameter space is small, so try it
    // exhaustively.
    if (std::abs(f.i) == dst.n() + 1) {
        for (int h = -(sn + 1); h <= sn + 1; ++h) {
            FcForm g;
            g.family = Family::Dtilde;
            g.cls = FcClass::AffineOne;
            g.i = sn;
            g.j = -(sn - 1);
            g.tail_kind = TailKind::InverseInterval;
            g.h = h;
            try {
                validate_form(src, g);
            } catch (const InvalidFormError&) {
                continue;
            }
            GroupElement img =
                element_of(dst, render_form(dst, map_I(src, g)));
            if (img == x) return true;
        }
    }
    return false;
}

namespace {

// Canonical target key of the form-level image of a source form.
Word image_key(const CoxeterSystem& src, const CoxeterSystem& dst,
               const FcForm& form, bool use_J) {
    FcForm img = use_J ? map_J(src, form) : map_I(src, form);
    return canonical_word(dst, element_of(dst, render_form(dst, img)));
}

std::string word_text(const CoxeterSystem& sys, const Word& w) {
    return w.empty() ? "1" : render_word(sys, w);
}

} // namespace

CheckReport check_expansions_B(int n, int max_len, int max_affine) {
    CoxeterSystem src = build_system(Family::Btilde, n + 1);
    CoxeterSystem dst = build_system(Family::Btilde, n + 2);
    CheckReport rep;
    for (auto& [form, word] : enumerate_fc(src, max_len, max_affine)) {
        int L = form_affine_length(form);
        TLElt img = tl_morphism_image(AlgebraMapId::Qn, n, word);
        LeadingDecomposition ld = tl_leading_terms(img);
        Word key_I = image_key(src, dst, form, false);
        ++rep.checked;
        auto fail = [&](const std::string& what) {
            rep.fail(what + " at " + word_text(src, word));
        };

        if (ld.max_affine != L) {
            fail("wrong top affine length");
            continue;
        }
        if (form.cls != FcClass::SecondType) {
            // Single top term p^L T_I; lower terms keep L(x) <= L and
            // lose Coxeter length.
            LinComb expect;
            expect.add(key_I, LaurentPoly::q_power(-L));
            if (ld.top != expect) fail("top term is not p^L T_I");
            if (L == 0 && !ld.rest.is_zero())
                fail("finite-parabolic image is not a single basis term");
            for (const auto& [k, c] : ld.rest.terms) {
                if (affine_length_of_word(dst, k) > L)
                    fail("lower term exceeds the affine length");
                if (k.size() >= key_I.size())
                    fail("lower term does not lose Coxeter length");
            }
        } else {
            LinComb expect;
            expect.add(key_I, LaurentPoly::monomial(L % 2 ? -1 : 1, 0));
            expect.add(image_key(src, dst, form, true),
                       LaurentPoly::monomial(L % 2 ? -1 : 1, -L));
            if (ld.top != expect)
                fail("second-type top pair is not {(-1)^L T_I, (-p)^L T_J}");
            bool t_ends = word.front() == src.gen_t() &&
                          word.back() == src.gen_t();
            for (const auto& [k, c] : ld.rest.terms) {
                if (affine_length_of_word(dst, k) < L) continue;
                if (k.size() >= key_I.size())
                    fail("same-affine-length term does not lose length");
                if (!t_ends) continue;
                // Left-factor refinement: the same-affine-length lower
                // terms start with t sn t.
                GroupElement y = element_of(dst, k);
                bool ok = y.left_descent(dst.gen_t());
                if (ok) {
                    y = GroupElement::generator(dst, dst.gen_t()) * y;
                    ok = y.left_descent(dst.gen_sigma(n));
                }
                if (ok) {
                    y = GroupElement::generator(dst, dst.gen_sigma(n)) * y;
                    ok = y.left_descent(dst.gen_t());
                }
                if (!ok) fail("refinement term lacks the t sn t left factor");
            }
        }
    }
    return rep;
}

CheckReport check_expansions_D(int n, int max_len, int max_affine) {
    CoxeterSystem src = build_system(Family::Dtilde, n + 1);
    CoxeterSystem dst = build_system(Family::Dtilde, n + 2);
    CheckReport rep;
    int sn = src.n();
    for (auto& [form, word] : enumerate_fc(src, max_len, max_affine)) {
        int L = form_affine_length(form);
        TLElt img = tl_morphism_image(AlgebraMapId::Pn, n, word);
        LeadingDecomposition ld = tl_leading_terms(img);
        Word key_I = image_key(src, dst, form, false);
        ++rep.checked;
        auto fail = [&](const std::string& what) {
            rep.fail(what + " at " + word_text(src, word));
        };

        if (ld.max_affine != L) {
            fail("wrong top affine length");
            continue;
        }
        switch (form.cls) {
        case FcClass::Finite: {
            LinComb expect;
            expect.add(key_I, LaurentPoly::one());
            if (ld.top != expect || !ld.rest.is_zero())
                fail("finite-parabolic image is not T_I");
            break;
        }
        case FcClass::FirstType: {
            LinComb expect;
            expect.add(key_I, LaurentPoly::q_power(-L));
            if (ld.top != expect) fail("first-type top term is not p^L T_I");
            for (const auto& [k, c] : ld.rest.terms) {
                if (affine_length_of_word(dst, k) > L)
                    fail("lower term exceeds the affine length");
                if (k.size() >= key_I.size())
                    fail("lower term does not lose Coxeter length");
            }
            break;
        }
        case FcClass::SecondType: {
            LinComb expect;
            expect.add(key_I, LaurentPoly::one());
            expect.add(image_key(src, dst, form, true),
                       LaurentPoly::q_power(-2 * L));
            if (ld.top != expect)
                fail("second-type top pair is not {T_I, p^2L T_J}");
            for (const auto& [k, c] : ld.rest.terms)
                if (affine_length_of_word(dst, k) == L &&
                    k.size() >= key_I.size())
                    fail("same-affine-length term does not lose length");
            break;
        }
        case FcClass::AffineOne: {
            // nu = 1 iff the leading interval is empty; wbar exists iff
            // the leading interval is nonempty and the Stembridge tail
            // avoids the top finite generator.
            bool empty_lead = std::abs(form.i) == sn + 1;
            Word tail_word = form.tail_kind == TailKind::Stembridge
                                 ? dform_word(src, form.tail)
                                 : interval_word_inv(src, form.h, sn);
            bool tail_small =
                std::count(tail_word.begin(), tail_word.end(),
                           src.gen_sigma(sn)) == 0;
            // The reversed-interval family with a nonempty tail goes
            // through the default substitution, so its image also has
            // an empty leading interval and the same coefficient p.
            bool reversed = form.i == sn && form.j == -(sn - 1) &&
                            form.tail_kind == TailKind::InverseInterval &&
                            !tail_small;
            bool has_wbar = !empty_lead && tail_small;

            LinComb expect;
            Word key_Ibar;
            if (has_wbar) {
                Word wbar = interval_word(src, form.i, sn - 1);
                wbar.push_back(src.gen_sbn());
                Word second = interval_word(src, form.j, sn);
                wbar.insert(wbar.end(), second.begin(), second.end());
                wbar.insert(wbar.end(), tail_word.begin(), tail_word.end());
                FcForm fbar = parse_form(src, element_of(src, wbar));
                key_Ibar = image_key(src, dst, fbar, false);
                expect.add(key_I, LaurentPoly::one());
                expect.add(key_Ibar, LaurentPoly::q_power(-1));
            } else {
                expect.add(key_I,
                           LaurentPoly::q_power(empty_lead || reversed ? -1 : 0));
            }
            for (const auto& [k, c] : ld.top.terms) {
                if (k == key_I || (has_wbar && k == key_Ibar)) continue;
                // Every other maximal term must avoid the image of I.
                if (is_in_image_I(n, element_of(dst, k)))
                    fail("stray top term lies in the image of I");
            }
            for (const auto& [k, c] : expect.terms) {
                auto it = ld.top.terms.find(k);
                if (it == ld.top.terms.end() || it->second != c) {
                    fail("affine-length-one leading coefficients are wrong");
                    break;
                }
            }
            break;
        }
        }
    }
    return rep;
}

} // namespace fc
