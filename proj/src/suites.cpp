/*
 * suites.cpp
 * ----------
 * Implementations of the named verification suites: fixture
 * conformance for the three element tables, defining-relation checks,
 * the dual reducedness oracle, tower length laws and commuting
 * squares, Hecke leading terms, the frozen generator expansions with
 * the stratified expansion reports, and truncated faithfulness.
 */
#include "fc/suites.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "fc/errors.hpp"
#include "fc/forms.hpp"
#include "fc/hecke.hpp"
#include "fc/tl.hpp"

namespace fc {

namespace {

std::string word_or_dash(const std::string& s) { return s == "-" ? "" : s; }

CheckReport suite_appendix_a(const SuiteOptions& opt) {
    CheckReport rep;
    CoxeterSystem sys = build_system(Family::D, 4);
    std::set<GroupElement> listed;
    for (auto& [cls, text] :
         load_fixture(opt.fixtures_dir + "/appendix_a.txt")) {
        Word w = parse_word(sys, text);
        ++rep.checked;
        if (!is_reduced(sys, w)) { rep.fail("not reduced: " + text); continue; }
        GroupElement x = element_of(sys, w);
        if (!is_fully_commutative(sys, x, opt.budget)) {
            rep.fail("not fully commutative: " + text);
            continue;
        }
        if (!listed.insert(x).second) rep.fail("duplicate row: " + text);
    }
    if (listed.size() != 48)
        rep.fail("expected 48 rows, got " + std::to_string(listed.size()));
    std::set<GroupElement> enumerated;
    for (auto& [x, w] : enumerate_ball(sys, 12, opt.budget))
        if (is_fully_commutative(sys, x, opt.budget)) enumerated.insert(x);
    ++rep.checked;
    if (listed != enumerated)
        rep.fail("fixture set differs from the enumerated fc set");
    return rep;
}

CheckReport suite_appendix_table(const SuiteOptions& opt, Family fam,
                                 const std::string& file) {
    CheckReport rep;
    CoxeterSystem sys = build_system(fam, 5);
    std::set<GroupElement> listed;
    for (auto& [cls, text] : load_fixture(opt.fixtures_dir + "/" + file)) {
        Word w = parse_word(sys, text);
        ++rep.checked;
        if (!is_reduced(sys, w)) { rep.fail("not reduced: " + text); continue; }
        GroupElement x = element_of(sys, w);
        if (!is_fully_commutative(sys, x, opt.budget)) {
            rep.fail("not fully commutative: " + text);
            continue;
        }
        FcClass expect = cls == "first"     ? FcClass::FirstType
                         : cls == "second"  ? FcClass::SecondType
                                            : FcClass::AffineOne;
        if (parse_form(sys, x).cls != expect)
            rep.fail("class mismatch (" + cls + "): " + text);
        if (!listed.insert(x).second) rep.fail("duplicate row: " + text);
    }

    // Uniqueness notes: the borderline word obtainable from both family
    // shapes if the powers were allowed to vanish. Both degenerate
    // parameterizations name the same element, the element is classified
    // with affine length one, and it occurs exactly once in the table.
    std::string first_shape, second_shape;
    if (fam == Family::Btilde) {
        first_shape = "s1 s2 s3 t s3";    // c = s1 s2 s3, h = 0, d = s3
        second_shape = "s1 s2 s3 t s3";   // a = s1 s2 s3 t, k = 0, b = s3
    } else {
        first_shape = "s2 sb3";           // c = s2, h = 0, d = 1
        second_shape = "s2 sb3";          // a = s2 sb3, k = 0, b = 1
    }
    ++rep.checked;
    GroupElement border = element_of(sys, parse_word(sys, first_shape));
    if (border != element_of(sys, parse_word(sys, second_shape)))
        rep.fail("borderline word parameterizations disagree");
    if (parse_form(sys, border).cls != FcClass::AffineOne)
        rep.fail("borderline word is not of affine length one");
    if (fam == Family::Btilde && listed.count(border) != 1)
        rep.fail("borderline word missing from the affine-length-one rows");
    return rep;
}

CheckReport suite_relations(const SuiteOptions&) {
    CheckReport rep;
    for (Family fam : {Family::Btilde, Family::Dtilde}) {
        CheckReport sub = check_tl_relations(build_system(fam, 5));
        rep.checked += sub.checked;
        for (auto& f : sub.failures)
            rep.fail(family_name(fam) + ": " + f);
    }
    return rep;
}

// Depth-first walk over all words, pruning at the first non-reduced
// prefix; both oracles are compared at every node visited.
void reduced_words_walk(const CoxeterSystem& sys, Word& w, int max_len,
                        CheckReport& rep) {
    if (static_cast<int>(w.size()) >= max_len) return;
    for (int s = 0; s < sys.rank; ++s) {
        w.push_back(s);
        bool incremental = is_reduced(sys, w);
        bool phi = is_reduced_phi(sys, w);
        ++rep.checked;
        if (incremental != phi)
            rep.fail("oracles disagree on: " + render_word(sys, w));
        if (incremental) reduced_words_walk(sys, w, max_len, rep);
        w.pop_back();
    }
}

CheckReport suite_reduced_words(const SuiteOptions& opt) {
    CheckReport rep;
    CoxeterSystem sys = build_system(Family::Btilde, opt.rank + 1);
    Word w;
    reduced_words_walk(sys, w, opt.max_len, rep);
    return rep;
}

CheckReport suite_towers(const SuiteOptions& opt) {
    CheckReport rep;
    for (int n : {3, 4}) {
        CheckReport sq = check_square(n);
        rep.checked += sq.checked;
        for (auto& f : sq.failures)
            rep.fail("square n=" + std::to_string(n) + ": " + f);
        for (TowerMapId id : {TowerMapId::Ln, TowerMapId::Fn}) {
            CheckReport lt = length_theorem_check(id, n, opt.max_len);
            rep.checked += lt.checked;
            for (auto& f : lt.failures)
                rep.fail(tower_map_name(id) + " n=" + std::to_string(n) +
                         ": " + f);
        }
    }
    return rep;
}

CheckReport suite_hecke_leading(const SuiteOptions& opt) {
    CheckReport rep;
    int n = 3;
    CoxeterSystem src = build_system(Family::Btilde, n + 1);
    CoxeterSystem dst = build_system(Family::Btilde, n + 2);
    int cap = std::min(opt.max_len, 6);
    for (auto& [x, w] : enumerate_ball(src, cap, opt.budget)) {
        ++rep.checked;
        Word img = substitute(TowerMapId::Ln, n + 1, w);
        Word key = canonical_word(dst, element_of(dst, img));
        int L = affine_length_of_word(src, w);
        LeadingDecomposition ld =
            leading_decomposition(morphism_image(AlgebraMapId::Qn, n, w));
        std::string at = " at " + render_word(src, w);
        if (ld.top.terms.size() != 1 ||
            ld.top.terms.begin()->first != key ||
            !ld.top.terms.begin()->second.is_q_power()) {
            rep.fail("top term is not a q power times the image" + at);
            continue;
        }
        if (ld.max_affine != L)
            rep.fail("affine length of the image is not preserved" + at);
        for (const auto& [k, c] : ld.rest.terms)
            if (k.size() >= key.size() ||
                affine_length_of_word(dst, k) > L) {
                rep.fail("lower term violates the stated bounds" + at);
                break;
            }
    }
    return rep;
}

CheckReport suite_tl_expansions(const SuiteOptions& opt) {
    CheckReport rep;

    // Frozen two-term expansion of the affine generator under Q3.
    {
        CoxeterSystem src = build_system(Family::Btilde, 4);
        CoxeterSystem dst = build_system(Family::Btilde, 5);
        TLElt img =
            tl_morphism_image(AlgebraMapId::Qn, 3, {src.gen_t()});
        LinComb expect;
        expect.add(canonical_word(dst, element_of(dst, parse_word(dst, "s3 t s3"))),
                   LaurentPoly::q_power(-1));
        expect.add(canonical_word(dst, element_of(dst, parse_word(dst, "s3 t"))),
                   LaurentPoly::q_power(-1) - LaurentPoly::one());
        ++rep.checked;
        if (img.body != expect) rep.fail("two-term affine expansion is wrong");
    }

    // Frozen thirteen-term expansion of the affine generator under P4.
    {
        CoxeterSystem src = build_system(Family::Dtilde, 5);
        CoxeterSystem dst = build_system(Family::Dtilde, 6);
        TLElt img =
            tl_morphism_image(AlgebraMapId::Pn, 4, {src.gen_sbn()});
        auto qp = [](int e) { return LaurentPoly::q_power(e); };
        std::vector<std::pair<std::string, LaurentPoly>> rows = {
            {"s4 s3 sb4", qp(0)},        {"s3 sb4 s4", qp(-1)},
            {"s4 sb4 s3", qp(-1)},       {"sb4 s3 s4", qp(-2)},
            {"s4 s3", qp(-1)},           {"s3 s4", qp(-2)},
            {"s3 sb4", qp(-1)},          {"sb4 s3", qp(-2)},
            {"sb4 s4", qp(-2) + qp(-1)}, {"s4", qp(-2)},
            {"s3", qp(-2)},              {"sb4", qp(-2)},
            {"", qp(-2) - qp(-1)},
        };
        LinComb expect;
        for (auto& [text, c] : rows)
            expect.add(canonical_word(dst, element_of(dst, parse_word(dst, text))), c);
        ++rep.checked;
        if (img.body != expect)
            rep.fail("thirteen-term affine expansion is wrong");
    }

    for (auto& [name, sub] :
         {std::pair<std::string, CheckReport>{
              "B", check_expansions_B(4, opt.max_len, 3)},
          {"D", check_expansions_D(4, opt.max_len, 3)}}) {
        rep.checked += sub.checked;
        for (auto& f : sub.failures) rep.fail(name + ": " + f);
    }
    return rep;
}

CheckReport suite_independence(const SuiteOptions& opt) {
    CheckReport rep;

    // Hecke level: images of the whole ball.
    {
        CoxeterSystem src = build_system(Family::Btilde, 4);
        std::vector<HeckeElt> images;
        for (auto& [x, w] : enumerate_ball(src, opt.max_len, opt.budget))
            images.push_back(morphism_image(AlgebraMapId::Qn, 3, w));
        rep.checked += static_cast<int>(images.size());
        if (!check_independent(images))
            rep.fail("Hecke images are linearly dependent");
    }

    // Quotient level: images of the fc basis under both morphisms.
    for (auto& [id, n] : {std::pair<AlgebraMapId, int>{AlgebraMapId::Qn, 3},
                          {AlgebraMapId::Pn, 4}}) {
        CheckReport sub = check_faithful(id, n, opt.max_len);
        rep.checked += sub.checked;
        for (auto& f : sub.failures) rep.fail(f);
    }
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"appendixA",  "appendixB",      "appendixC",
            "relations",  "reduced-words",  "towers",
            "hecke-leading", "tl-expansions", "independence"};
}

std::vector<std::pair<std::string, std::string>> load_fixture(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open fixture file " + path);
    std::vector<std::pair<std::string, std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        size_t bar = line.find('|');
        if (bar == std::string::npos)
            rows.emplace_back("", word_or_dash(line));
        else
            rows.emplace_back(line.substr(0, bar),
                              word_or_dash(line.substr(bar + 1)));
    }
    return rows;
}

CheckReport run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "all") {
        CheckReport rep;
        for (auto& n : suite_names()) {
            CheckReport sub = run_suite(n, opt);
            rep.checked += sub.checked;
            for (auto& f : sub.failures) rep.fail(n + ": " + f);
        }
        return rep;
    }
    if (name == "appendixA") return suite_appendix_a(opt);
    if (name == "appendixB")
        return suite_appendix_table(opt, Family::Btilde, "appendix_b.txt");
    if (name == "appendixC")
        return suite_appendix_table(opt, Family::Dtilde, "appendix_c.txt");
    if (name == "relations") return suite_relations(opt);
    if (name == "reduced-words") return suite_reduced_words(opt);
    if (name == "towers") return suite_towers(opt);
    if (name == "hecke-leading") return suite_hecke_leading(opt);
    if (name == "tl-expansions") return suite_tl_expansions(opt);
    if (name == "independence") return suite_independence(opt);
    throw DomainError("unknown suite: " + name);
}

} // namespace fc
