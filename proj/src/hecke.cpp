/*
 * hecke.cpp
 * ---------
 * Hecke algebra arithmetic on the group-element basis and the
 * rank-raising morphisms Rn, Qn, Pn.
 */
#include "fc/hecke.hpp"

#include <algorithm>

#include "fc/errors.hpp"

namespace fc {

namespace {

// The target-system index of the source generator with the same token.
int same_token(const CoxeterSystem& src, const CoxeterSystem& dst, int s) {
    Word w = parse_word(dst, src.tokens[s]);
    return w[0];
}

LaurentPoly q_minus_one() {
    return LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, 0);
}

} // namespace

bool HeckeElt::operator==(const HeckeElt& o) const {
    return system == o.system && body == o.body;
}

HeckeElt hecke_zero(const CoxeterSystem& sys) { return HeckeElt{sys, {}}; }

HeckeElt hecke_one(const CoxeterSystem& sys) {
    HeckeElt h{sys, {}};
    h.body.add({}, LaurentPoly::one());
    return h;
}

HeckeElt hecke_basis(const CoxeterSystem& sys, const Word& w) {
    HeckeElt h{sys, {}};
    h.body.add(canonical_word(sys, element_of(sys, w)), LaurentPoly::one());
    return h;
}

HeckeElt hecke_add(const HeckeElt& a, const HeckeElt& b) {
    if (!(a.system == b.system)) throw SystemMismatchError("hecke_add");
    return HeckeElt{a.system, a.body + b.body};
}

HeckeElt hecke_scale(const LaurentPoly& c, const HeckeElt& h) {
    return HeckeElt{h.system, h.body.scaled(c)};
}

HeckeElt mult_left_gen(int s, const HeckeElt& h) {
    const CoxeterSystem& sys = h.system;
    check_word(sys, {s});
    HeckeElt out{sys, {}};
    GroupElement g = GroupElement::generator(sys, s);
    for (const auto& [w, c] : h.body.terms) {
        GroupElement x = element_of(sys, w);
        Word sw = canonical_word(sys, g * x);
        if (x.left_descent(s)) {
            out.body.add(sw, c.shifted(1));
            out.body.add(w, c * q_minus_one());
        } else {
            out.body.add(sw, c);
        }
    }
    return out;
}

HeckeElt mult(const HeckeElt& a, const HeckeElt& b) {
    if (!(a.system == b.system)) throw SystemMismatchError("hecke mult");
    HeckeElt out{a.system, {}};
    for (const auto& [w, c] : a.body.terms) {
        HeckeElt acc = b;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = mult_left_gen(*it, acc);
        out.body += acc.body.scaled(c);
    }
    return out;
}

HeckeElt gen_inverse(const CoxeterSystem& sys, int s) {
    check_word(sys, {s});
    HeckeElt h{sys, {}};
    h.body.add({s}, LaurentPoly::q_power(-1));
    h.body.add({}, LaurentPoly::q_power(-1) - LaurentPoly::one());
    return h;
}

HeckeElt morphism_image(AlgebraMapId id, int n, const Word& w) {
    Family fam = id == AlgebraMapId::Rn   ? Family::Ctilde
                 : id == AlgebraMapId::Qn ? Family::Btilde
                                          : Family::Dtilde;
    CoxeterSystem src = build_system(fam, n + 1);
    CoxeterSystem dst = build_system(fam, n + 2);

    // Images of the source generators in the target algebra.
    std::vector<HeckeElt> gen_image;
    int affine = id == AlgebraMapId::Pn ? src.gen_sbn() : src.gen_t();
    for (int s = 0; s < src.rank; ++s) {
        if (s != affine) {
            gen_image.push_back(hecke_basis(dst, {same_token(src, dst, s)}));
            continue;
        }
        int sn = dst.gen_sigma(n);
        if (id == AlgebraMapId::Pn) {
            int sm = dst.gen_sigma(n - 1);
            HeckeElt img = hecke_basis(dst, {sn, sm, dst.gen_sbn()});
            img = mult(img, gen_inverse(dst, sm));
            img = mult(img, gen_inverse(dst, sn));
            gen_image.push_back(img);
        } else {
            HeckeElt img = hecke_basis(dst, {sn, dst.gen_t()});
            gen_image.push_back(mult(img, gen_inverse(dst, sn)));
        }
    }

    HeckeElt out = hecke_one(dst);
    for (int s : canonical_word(src, element_of(src, w)))
        out = mult(out, gen_image[s]);
    return out;
}

LeadingDecomposition leading_decomposition(const HeckeElt& h) {
    LeadingDecomposition out;
    if (h.body.is_zero()) return out;
    if (h.system.family == Family::Dtilde)
        for (const auto& [w, c] : h.body.terms)
            if (!is_fully_commutative(h.system, w))
                throw DomainError(
                    "leading decomposition in type D-tilde needs fully "
                    "commutative keys");
    int max_aff = -1, max_len = -1;
    for (const auto& [w, c] : h.body.terms) {
        int L = affine_length_of_word(h.system, w);
        int l = static_cast<int>(w.size());
        if (L > max_aff || (L == max_aff && l > max_len)) {
            max_aff = L;
            max_len = l;
        }
    }
    out.max_affine = max_aff;
    for (const auto& [w, c] : h.body.terms) {
        int L = affine_length_of_word(h.system, w);
        if (L == max_aff && static_cast<int>(w.size()) == max_len)
            out.top.add(w, c);
        else
            out.rest.add(w, c);
    }
    return out;
}

bool check_independent(const std::vector<HeckeElt>& elements) {
    std::vector<LinComb> bodies;
    bodies.reserve(elements.size());
    for (const HeckeElt& e : elements) {
        if (!(e.system == elements.front().system))
            throw SystemMismatchError("check_independent");
        bodies.push_back(e.body);
    }
    return check_independent(bodies);
}

CheckReport hecke_homomorphy(AlgebraMapId id, int n) {
    if (id == AlgebraMapId::Pn && n < 4)
        throw DomainError("Pn is a homomorphism from n = 4 up");
    Family fam = id == AlgebraMapId::Rn   ? Family::Ctilde
                 : id == AlgebraMapId::Qn ? Family::Btilde
                                          : Family::Dtilde;
    CoxeterSystem src = build_system(fam, n + 1);
    CoxeterSystem dst = build_system(fam, n + 2);

    std::vector<HeckeElt> img;
    for (int s = 0; s < src.rank; ++s)
        img.push_back(morphism_image(id, n, {s}));

    CheckReport rep;
    LaurentPoly qm1 = q_minus_one();
    for (int s = 0; s < src.rank; ++s) {
        HeckeElt lhs = mult(img[s], img[s]);
        HeckeElt rhs = hecke_add(hecke_scale(LaurentPoly::q_power(1),
                                             hecke_one(dst)),
                                 hecke_scale(qm1, img[s]));
        ++rep.checked;
        if (!(lhs == rhs))
            rep.fail("quadratic relation fails for " + src.tokens[s]);
    }
    for (int s = 0; s < src.rank; ++s) {
        for (int t = s + 1; t < src.rank; ++t) {
            int m = src.m(s, t);
            HeckeElt lhs = hecke_one(dst), rhs = hecke_one(dst);
            for (int i = 0; i < m; ++i) {
                lhs = mult(lhs, img[i % 2 == 0 ? s : t]);
                rhs = mult(rhs, img[i % 2 == 0 ? t : s]);
            }
            ++rep.checked;
            if (!(lhs == rhs))
                rep.fail("braid relation fails for " + src.tokens[s] + ", " +
                         src.tokens[t]);
        }
    }
    return rep;
}

std::map<Word, BigInt> specialize_q1(const HeckeElt& h) {
    std::map<Word, BigInt> out;
    for (const auto& [w, c] : h.body.terms) {
        BigInt v = c.eval_at_one();
        if (!(v == BigInt(0))) out.emplace(w, v);
    }
    return out;
}

} // namespace fc
