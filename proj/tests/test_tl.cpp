/*
 * test_tl.cpp
 * -----------
 * Temperley-Lieb algebras on the fully commutative basis: the
 * reduction engine and its defining relations, agreement with the
 * Hecke algebra through the quotient projection, the rank-raising
 * morphisms with their frozen generator expansions, the leading-term
 * expansion reports, and truncated faithfulness.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "fc/errors.hpp"
#include "fc/tl.hpp"

using namespace fc;

namespace {

LaurentPoly lp(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p += LaurentPoly::monomial(c, e);
    return p;
}

TLElt basis(const CoxeterSystem& sys, const std::string& word) {
    return tl_basis(sys, parse_word(sys, word));
}

Word key(const CoxeterSystem& sys, const std::string& word) {
    return canonical_word(sys, element_of(sys, parse_word(sys, word)));
}

// Projection of a Hecke element to the quotient: each basis word is
// folded through the reduction engine. The independent oracle for the
// Temperley-Lieb product and for the morphism images.
TLElt project(const HeckeElt& h) {
    TLElt out = tl_zero(h.system);
    for (const auto& [w, c] : h.body.terms)
        out = tl_add(out, tl_scale(c, reduce_word(h.system, w)));
    return out;
}

std::vector<std::pair<GroupElement, Word>> fc_ball(const CoxeterSystem& sys,
                                                   int max_len) {
    std::vector<std::pair<GroupElement, Word>> out;
    for (auto& e : enumerate_ball(sys, max_len))
        if (is_fully_commutative(sys, e.first)) out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("reduction engine on the defining words") {
    CoxeterSystem sys = build_system(Family::Btilde, 5);

    // Quadratic relation.
    TLElt sq = reduce_word(sys, parse_word(sys, "s1 s1"));
    CHECK(sq.body.terms.size() == 2);
    CHECK(sq.body.terms.at(key(sys, "s1")) == lp({{0, -1}, {1, 1}}));
    CHECK(sq.body.terms.at({}) == lp({{1, 1}}));

    // A bond of order 3: the braid monomial rearranges to minus the
    // sum of all shorter alternating monomials.
    TLElt v = reduce_word(sys, parse_word(sys, "s1 s2 s1"));
    CHECK(v.body.terms.size() == 5);
    for (const char* w : {"s1 s2", "s2 s1", "s1", "s2", ""})
        CHECK(v.body.terms.at(key(sys, w)) == lp({{0, -1}}));

    // A bond of order 4.
    TLElt z = reduce_word(sys, parse_word(sys, "s3 t s3 t"));
    CHECK(z.body.terms.size() == 7);
    for (const char* w : {"s3 t s3", "t s3 t", "s3 t", "t s3", "s3", "t", ""})
        CHECK(z.body.terms.at(key(sys, w)) == lp({{0, -1}}));

    // Commuting generators concatenate.
    CHECK(mult(basis(sys, "s1"), basis(sys, "s3")) == basis(sys, "s1 s3"));

    CHECK_THROWS_AS(tl_basis(sys, parse_word(sys, "s1 s2 s1")), NotFCError);
    CHECK_THROWS_AS(mult(tl_one(sys), tl_one(build_system(Family::Btilde, 4))),
                    SystemMismatchError);
}

TEST_CASE("defining relations hold in every system under test") {
    for (CoxeterSystem sys : {build_system(Family::Btilde, 5),
                              build_system(Family::Dtilde, 5),
                              build_system(Family::D, 4)}) {
        CheckReport rep = check_tl_relations(sys);
        CHECK(rep.checked > 0);
        for (auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok());
    }
}

TEST_CASE("generator inverses and unit laws") {
    CoxeterSystem sys = build_system(Family::Dtilde, 5);
    for (int s = 0; s < sys.rank; ++s) {
        TLElt gs = tl_basis(sys, {s});
        TLElt inv = tl_gen_inverse(sys, s);
        CHECK(mult(gs, inv) == tl_one(sys));
        CHECK(mult(inv, gs) == tl_one(sys));
        CHECK(mult(gs, tl_one(sys)) == gs);
        CHECK(mult(tl_one(sys), gs) == gs);
    }
}

TEST_CASE("associativity and agreement with the Hecke quotient") {
    CoxeterSystem sys = build_system(Family::Btilde, 4);
    auto ball = fc_ball(sys, 5);
    std::mt19937 rng(511);
    std::uniform_int_distribution<size_t> pick(0, ball.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
        const Word& wa = ball[pick(rng)].second;
        const Word& wb = ball[pick(rng)].second;
        const Word& wc = ball[pick(rng)].second;
        TLElt a = tl_basis(sys, wa), b = tl_basis(sys, wb),
              c = tl_basis(sys, wc);
        CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
        // The product agrees with the Hecke product pushed through the
        // quotient projection.
        CHECK(mult(a, b) ==
              project(mult(hecke_basis(sys, wa), hecke_basis(sys, wb))));
    }
}

TEST_CASE("reduction is independent of the chosen reduced word") {
    // Folding any reduced word of a fully commutative element yields
    // the basis element of its canonical word.
    CoxeterSystem sys = build_system(Family::Dtilde, 5);
    for (auto& [x, w] : fc_ball(sys, 6)) {
        for (const Word& u : commutation_class(sys, w))
            CHECK(reduce_word(sys, u) == tl_basis(sys, w));
    }
}

TEST_CASE("the finite quotient closes on its basis") {
    // D_4 has 48 fully commutative elements out of 192; every product
    // of two basis elements stays supported on that set.
    CoxeterSystem sys = build_system(Family::D, 4);
    auto fc = fc_ball(sys, 12);
    REQUIRE(fc.size() == 48);
    std::set<Word> keys;
    for (auto& [x, w] : fc) keys.insert(w);
    for (auto& [x1, w1] : fc)
        for (auto& [x2, w2] : fc) {
            TLElt prod = mult(tl_basis(sys, w1), tl_basis(sys, w2));
            for (const auto& [k, c] : prod.body.terms)
                CHECK(keys.count(k) == 1);
        }
}

TEST_CASE("frozen generator expansion under Qn") {
    // Q_3 sends the affine generator to p T_{s3 t s3} + (p-1) T_{s3 t}.
    CoxeterSystem src = build_system(Family::Btilde, 4);
    CoxeterSystem dst = build_system(Family::Btilde, 5);
    TLElt img = tl_morphism_image(AlgebraMapId::Qn, 3, parse_word(src, "t"));
    CHECK(img.body.terms.size() == 2);
    CHECK(img.body.terms.at(key(dst, "s3 t s3")) == lp({{-1, 1}}));
    CHECK(img.body.terms.at(key(dst, "s3 t")) == lp({{-1, 1}, {0, -1}}));

    // Plain generators are fixed.
    CHECK(tl_morphism_image(AlgebraMapId::Qn, 3, parse_word(src, "s1")) ==
          basis(dst, "s1"));
    CHECK(tl_morphism_image(AlgebraMapId::Qn, 3, parse_word(src, "sb1")) ==
          basis(dst, "sb1"));

    CHECK_THROWS_AS(tl_morphism_image(AlgebraMapId::Rn, 3, Word{}),
                    DomainError);
    CHECK_THROWS_AS(
        tl_morphism_image(AlgebraMapId::Qn, 3, parse_word(src, "s1 s2 s1")),
        DomainError);
}

TEST_CASE("frozen generator expansion under Pn") {
    // P_4 sends the affine generator to a thirteen-term combination.
    CoxeterSystem src = build_system(Family::Dtilde, 5);
    CoxeterSystem dst = build_system(Family::Dtilde, 6);
    TLElt img = tl_morphism_image(AlgebraMapId::Pn, 4, parse_word(src, "sb3"));

    std::vector<std::pair<const char*, LaurentPoly>> expect = {
        {"s4 s3 sb4", lp({{0, 1}})},
        {"s3 sb4 s4", lp({{-1, 1}})},
        {"s4 sb4 s3", lp({{-1, 1}})},
        {"sb4 s3 s4", lp({{-2, 1}})},
        {"s4 s3", lp({{-1, 1}})},
        {"s3 s4", lp({{-2, 1}})},
        {"s3 sb4", lp({{-1, 1}})},
        {"sb4 s3", lp({{-2, 1}})},
        {"sb4 s4", lp({{-2, 1}, {-1, 1}})},
        {"s4", lp({{-2, 1}})},
        {"s3", lp({{-2, 1}})},
        {"sb4", lp({{-2, 1}})},
        {"", lp({{-2, 1}, {-1, -1}})},
    };
    CHECK(img.body.terms.size() == expect.size());
    for (auto& [w, c] : expect) CHECK(img.body.terms.at(key(dst, w)) == c);

    // Agreement with the Hecke-level image through the projection.
    CHECK(img == project(morphism_image(AlgebraMapId::Pn, 4,
                                        parse_word(src, "sb3"))));
}

TEST_CASE("morphism images agree with the Hecke quotient") {
    CoxeterSystem bsrc = build_system(Family::Btilde, 4);
    for (auto& [x, w] : fc_ball(bsrc, 5))
        CHECK(tl_morphism_image(AlgebraMapId::Qn, 3, w) ==
              project(morphism_image(AlgebraMapId::Qn, 3, w)));

    CoxeterSystem dsrc = build_system(Family::Dtilde, 5);
    for (auto& [x, w] : fc_ball(dsrc, 4))
        CHECK(tl_morphism_image(AlgebraMapId::Pn, 4, w) ==
              project(morphism_image(AlgebraMapId::Pn, 4, w)));
}

TEST_CASE("leading-term expansion reports at modest bounds") {
    CheckReport b = check_expansions_B(4, 6, 2);
    CHECK(b.checked > 0);
    for (auto& f : b.failures) MESSAGE(f);
    CHECK(b.ok());

    CheckReport d = check_expansions_D(4, 6, 2);
    CHECK(d.checked > 0);
    for (auto& f : d.failures) MESSAGE(f);
    CHECK(d.ok());
}

TEST_CASE("membership in the image of the normal-form injection") {
    // Oracle check at n = 4: decide membership for every affine-length
    // one target of length <= 7 and compare against the enumerated
    // image of the fully commutative sources of length <= 6.
    int n = 4;
    CoxeterSystem src = build_system(Family::Dtilde, n + 1);
    CoxeterSystem dst = build_system(Family::Dtilde, n + 2);
    std::set<Word> image;
    for (auto& [x, w] : fc_ball(src, 6)) {
        if (affine_length(src, x) != 1) continue;
        FcForm f = parse_form(src, x);
        Word iw = render_form(dst, map_I(src, f));
        image.insert(canonical_word(dst, element_of(dst, iw)));
    }
    int members = 0, expected = 0;
    for (const Word& w : image) expected += w.size() <= 7;
    for (auto& [x, w] : fc_ball(dst, 7)) {
        if (affine_length(dst, x) != 1) continue;
        bool in = is_in_image_I(n, x);
        CHECK(in == (image.count(w) == 1));
        members += in;
    }
    CHECK(members == expected);
}

TEST_CASE("truncated faithfulness of the morphisms") {
    CheckReport q = check_faithful(AlgebraMapId::Qn, 3, 8);
    CHECK(q.checked > 0);
    CHECK(q.ok());

    CheckReport p = check_faithful(AlgebraMapId::Pn, 4, 6);
    CHECK(p.checked > 0);
    CHECK(p.ok());
}
