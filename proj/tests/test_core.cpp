// Unit tests for Coxeter systems, the geometric representation, and the
// fundamental word predicates. The dual reducedness oracles and the BFS
// enumeration serve as independent cross-checks throughout.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fc/coxeter.hpp"

using namespace fc;

static Word W(const CoxeterSystem& sys, const std::string& text) {
    return parse_word(sys, text);
}

TEST_CASE("system construction and bond orders") {
    CoxeterSystem b4 = build_system(Family::Btilde, 5); // generators sb1 s1 s2 s3 t
    CHECK(b4.n() == 3);
    CHECK(b4.tokens == std::vector<std::string>{"sb1", "s1", "s2", "s3", "t"});
    CHECK(b4.m(b4.gen_sigma(3), b4.gen_t()) == 4);
    CHECK(b4.m(b4.gen_sb1(), b4.gen_sigma(2)) == 3);
    CHECK(b4.m(b4.gen_sb1(), b4.gen_sigma(1)) == 2);
    CHECK(b4.m(b4.gen_sb1(), b4.gen_t()) == 2);

    CoxeterSystem d4 = build_system(Family::D, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK((d4.m(i, j) == 1 || d4.m(i, j) == 2 || d4.m(i, j) == 3));
    CHECK(d4.m(d4.gen_sigma(1), d4.gen_sb1()) == 2);

    CoxeterSystem dt4 = build_system(Family::Dtilde, 5);
    CHECK(dt4.tokens == std::vector<std::string>{"sb1", "s1", "s2", "s3", "sb3"});
    CHECK(dt4.m(dt4.gen_sigma(2), dt4.gen_sbn()) == 3);
    CHECK(dt4.m(dt4.gen_sigma(3), dt4.gen_sbn()) == 2);

    CoxeterSystem c4 = build_system(Family::Ctilde, 5);
    CHECK(c4.tokens == std::vector<std::string>{"s0", "s1", "s2", "s3", "t"});
    CHECK(c4.m(c4.gen_s0(), c4.gen_sigma(1)) == 4);
    CHECK(c4.m(c4.gen_sigma(3), c4.gen_t()) == 4);

    CHECK_THROWS_AS(build_system(Family::Btilde, 3), RankError);
    CHECK_THROWS_AS(build_system(Family::D, 2), RankError);
}

TEST_CASE("defining relations hold in the geometric representation") {
    for (auto [fam, rank] : std::vector<std::pair<Family, int>>{{Family::D, 4},
                                                                {Family::Btilde, 5},
                                                                {Family::Ctilde, 5},
                                                                {Family::Dtilde, 5}}) {
        CoxeterSystem sys = build_system(fam, rank);
        for (int s = 0; s < sys.rank; ++s) {
            GroupElement gs = GroupElement::generator(sys, s);
            CHECK(gs * gs == GroupElement::identity(sys));
            for (int t = 0; t < sys.rank; ++t) {
                if (s == t) continue;
                GroupElement st = gs * GroupElement::generator(sys, t);
                GroupElement pw = GroupElement::identity(sys);
                for (int i = 0; i < sys.m(s, t); ++i) pw = pw * st;
                CHECK(pw == GroupElement::identity(sys));
            }
        }
    }
}

TEST_CASE("word parsing") {
    CoxeterSystem b4 = build_system(Family::Btilde, 5);
    Word w = W(b4, "s3 t s3");
    CHECK(w == Word{3, 4, 3});
    CHECK(render_word(b4, w) == "s3 t s3");
    CHECK_THROWS_AS(parse_word(b4, "s3 s9 t"), ParseError);
    try {
        parse_word(b4, "s3 s9 t");
    } catch (const ParseError& e) {
        CHECK(e.position == 1);
    }
}

TEST_CASE("length, descents, canonical word on D_4") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    GroupElement id = GroupElement::identity(d4);
    CHECK(length(d4, id) == 0);
    CHECK(descents(d4, id, Side::Left).empty());

    GroupElement x = element_of(d4, W(d4, "s1 s2"));
    CHECK(length(d4, x) == 2);
    CHECK(descents(d4, x, Side::Left) == std::vector<int>{d4.gen_sigma(1)});
    CHECK(descents(d4, x, Side::Right) == std::vector<int>{d4.gen_sigma(2)});

    CHECK(element_of(d4, W(d4, "s1 s2")) != element_of(d4, W(d4, "s2 s1")));
    CHECK(element_of(d4, W(d4, "s1 s1")) == id);

    CHECK(canonical_word(d4, element_of(d4, W(d4, "s3 s1"))) == W(d4, "s1 s3"));
    CHECK(canonical_word(d4, element_of(d4, W(d4, "s1 sb1"))) == W(d4, "sb1 s1"));
    CHECK(canonical_word(d4, id).empty());
}

TEST_CASE("ball enumeration of W(D_4)") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    auto ball = enumerate_ball(d4, 20);
    CHECK(ball.size() == 192); // |W(D_4)| = 2^3 * 4! / ... = 192
    int maxlen = 0;
    for (auto& [x, w] : ball) maxlen = std::max<int>(maxlen, w.size());
    CHECK(maxlen == 12);
    CHECK(enumerate_ball(d4, 0).size() == 1);
    CHECK(enumerate_ball(d4, 1).size() == 5);

    // canonical_word round-trips and is reduced, with correct ordering
    for (size_t i = 0; i < ball.size(); ++i) {
        auto& [x, w] = ball[i];
        CHECK(element_of(d4, w) == x);
        CHECK(canonical_word(d4, x) == w);
        CHECK(is_reduced(d4, w));
        if (i) CHECK(shortlex_less(ball[i - 1].second, w));
    }
    CHECK_THROWS_AS(enumerate_ball(d4, 12, 100), BudgetError);
}

TEST_CASE("fully commutative elements of W(D_4) number 48") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    auto ball = enumerate_ball(d4, 20);
    int fc = 0;
    for (auto& [x, w] : ball)
        if (is_fully_commutative(d4, x)) ++fc;
    CHECK(fc == 48);
}

TEST_CASE("reducedness basics") {
    CoxeterSystem b4 = build_system(Family::Btilde, 5);
    CHECK_FALSE(is_reduced(b4, W(b4, "s1 s1")));
    CHECK(is_reduced(b4, W(b4, "s1 s2 s1")));
    CHECK(is_reduced(b4, W(b4, "s3 s2 s1 sb1 s2 s3")));
    CHECK(is_reduced(b4, W(b4, "s3 t s3 t")));
    CHECK_FALSE(is_reduced_phi(b4, W(b4, "s1 s1")));
    CHECK(is_reduced_phi(b4, W(b4, "s1 s2")));
}

TEST_CASE("dual reducedness oracles agree exhaustively at length <= 5") {
    for (auto [fam, rank] : std::vector<std::pair<Family, int>>{{Family::Btilde, 4},
                                                                {Family::Dtilde, 5}}) {
        CoxeterSystem sys = build_system(fam, rank);
        // All words of length <= 5 whose length-minus-one prefix is reduced;
        // a non-reduced prefix forces both oracles false for every extension
        // (the duplicate pair of reflections persists).
        std::vector<Word> frontier{{}};
        for (int len = 1; len <= 5; ++len) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (int g = 0; g < sys.rank; ++g) {
                    Word ext = w;
                    ext.push_back(g);
                    bool a = is_reduced(sys, ext);
                    bool b = is_reduced_phi(sys, ext);
                    CHECK(a == b);
                    if (a) next.push_back(ext);
                }
            frontier = std::move(next);
        }
    }
}

TEST_CASE("commutation classes") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    auto cls = commutation_class(d4, W(d4, "s1 sb1 s2"));
    CHECK(cls.size() == 2);
    CHECK(commutation_class(d4, W(d4, "s1 s2 s1")).size() == 1);
    CHECK(commutation_class(d4, W(d4, "s1 s3")).size() == 2);
    CHECK_THROWS_AS(commutation_class(d4, W(d4, "s1 s1")), NotReducedError);

    // every member is reduced and represents the same element
    Word w = W(d4, "s2 s1 sb1 s2");
    GroupElement x = element_of(d4, w);
    for (const Word& v : commutation_class(d4, w)) {
        CHECK(is_reduced(d4, v));
        CHECK(element_of(d4, v) == x);
    }
}

TEST_CASE("full commutativity basics") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    CHECK_FALSE(is_fully_commutative(d4, element_of(d4, W(d4, "s1 s2 s1"))));
    CoxeterSystem b4 = build_system(Family::Btilde, 5);
    CHECK(is_fully_commutative(b4, element_of(b4, W(b4, "s3 s2 s1 sb1 s2 s3"))));
    CHECK_FALSE(is_fully_commutative(b4, element_of(b4, W(b4, "s3 t s3 t"))));
    CHECK(is_fully_commutative(b4, element_of(b4, W(b4, "s3 t s3"))));
}

TEST_CASE("fc iff reduced words form a single commutation class, W(D_4)") {
    CoxeterSystem d4 = build_system(Family::D, 4);
    auto ball = enumerate_ball(d4, 20);
    for (auto& [x, w] : ball) {
        // all reduced words by DFS over length-preserving right extensions
        std::set<Word> all;
        std::function<void(GroupElement, Word)> dfs = [&](GroupElement cur, Word acc) {
            if (cur.is_identity()) {
                all.insert(acc);
                return;
            }
            for (int g = 0; g < d4.rank; ++g)
                if (cur.left_descent(g)) {
                    Word nxt = acc;
                    nxt.push_back(g);
                    dfs(GroupElement::generator(d4, g) * cur, nxt);
                }
        };
        dfs(x, {});
        bool fc = is_fully_commutative(d4, x);
        CHECK(fc == (all.size() == commutation_class(d4, w).size()));
    }
}

TEST_CASE("affine length well-defined and counted") {
    CoxeterSystem b4 = build_system(Family::Btilde, 5);
    CHECK(count_occurrences(W(b4, "t s3 t"), b4.gen_t()) == 2);
    CHECK(count_occurrences(W(b4, "s1 s2"), b4.gen_t()) == 0);
    GroupElement x = element_of(b4, W(b4, "s3 t s3"));
    CHECK(affine_length(b4, x) == 1);
    CHECK(affine_length(b4, GroupElement::identity(b4)) == 0);
}

TEST_CASE("affine length is constant across reduced words, small ball of Btilde_3") {
    CoxeterSystem b3 = build_system(Family::Btilde, 4);
    auto ball = enumerate_ball(b3, 6);
    for (auto& [x, w] : ball) {
        int l0 = affine_length_of_word(b3, w);
        std::set<Word> all;
        std::function<void(GroupElement, Word)> dfs = [&](GroupElement cur, Word acc) {
            if (cur.is_identity()) {
                all.insert(acc);
                return;
            }
            for (int g = 0; g < b3.rank; ++g)
                if (cur.left_descent(g)) {
                    Word nxt = acc;
                    nxt.push_back(g);
                    dfs(GroupElement::generator(b3, g) * cur, nxt);
                }
        };
        dfs(x, {});
        for (const Word& v : all) CHECK(affine_length_of_word(b3, v) == l0);
    }
}

TEST_CASE("QuadInt exact sign") {
    CHECK(QuadInt(0, 0).sign() == 0);
    CHECK(QuadInt(3, -2).sign() == 1);  // 3 - 2*sqrt2 = 0.17...
    CHECK(QuadInt(-3, 2).sign() == -1);
    CHECK(QuadInt(2, -2).sign() == -1); // 2 - 2*sqrt2 < 0
    CHECK(QuadInt(-1, 1).sign() == 1);  // sqrt2 - 1 > 0
    CHECK((QuadInt(1, 1) * QuadInt(1, -1)) == QuadInt(-1, 0));
}
