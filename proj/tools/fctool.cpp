/*
 * fctool.cpp
 * ----------
 * Command-line front end: deterministic enumeration listings, the
 * named verification suites, and the tower / algebra maps with JSON
 * output.
 *
 * Exit codes: 0 success (and every check passed for verify), 1 a
 * verification check failed, 2 argument or domain errors, 3 budget
 * exhausted. The environment variable FCTOOL_BUDGET caps enumeration
 * sizes.
 */
#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fc/errors.hpp"
#include "fc/forms.hpp"
#include "fc/hecke.hpp"
#include "fc/suites.hpp"
#include "fc/tl.hpp"
#include "fc/towers.hpp"

using json = nlohmann::ordered_json;
using namespace fc;

namespace {

size_t env_budget() {
    const char* s = std::getenv("FCTOOL_BUDGET");
    if (!s) return kDefaultBudget;
    return static_cast<size_t>(std::stoull(s));
}

int safe_affine_length(const CoxeterSystem& sys, const Word& w) {
    return sys.family == Family::D ? 0 : affine_length_of_word(sys, w);
}

json poly_json(const LaurentPoly& p) {
    json coeffs = json::object();
    for (auto& [e, c] : p.coeffs) coeffs[std::to_string(e)] = c.to_string();
    return json{{"coeffs", coeffs}};
}

json word_json(const CoxeterSystem& sys, const Word& w) {
    json out = json::array();
    for (int s : w) out.push_back(sys.tokens[s]);
    return out;
}

json terms_json(const CoxeterSystem& sys, const LinComb& body, bool fc_mark) {
    json out = json::array();
    for (auto& [w, c] : body.terms) {
        json row{{"basis_word", word_json(sys, w)}, {"coeff", poly_json(c)}};
        if (fc_mark) row["fc"] = true;
        out.push_back(row);
    }
    return out;
}

json form_json(const CoxeterSystem& sys, const FcForm& f) {
    static const char* names[] = {"finite", "affine1", "first", "second"};
    json params{{"i", f.i}, {"j", f.j}, {"eps", f.eps}, {"eta", f.eta},
                {"k", f.k}, {"f", f.f}, {"h", f.h}, {"j1", f.j1},
                {"is", f.is}, {"js", f.js},
                {"tail_kind", f.tail_kind == TailKind::Stembridge
                                  ? "stembridge" : "inverse-interval"}};
    json tail = json::array();
    for (auto& [m, n] : f.tail.terms) tail.push_back(json::array({m, n}));
    params["tail"] = tail;
    Word w = render_form(sys, f);
    return json{{"class", names[static_cast<int>(f.cls)]},
                {"params", params},
                {"psi1", f.psi1},
                {"word", word_json(sys, w)},
                {"length", w.size()},
                {"affine_length", form_affine_length(f)}};
}

int run_enumerate(const std::string& family, int rank, int max_len,
                  int max_affine, bool fc_only, const std::string& format,
                  bool series) {
    auto fam = family_from_name(family);
    if (!fam) throw DomainError("unknown family " + family);
    CoxeterSystem sys = build_system(*fam, rank);
    if (max_len < 0) {
        if (*fam != Family::D)
            throw DomainError("--max-length is required for affine families");
        max_len = 64; // the finite ball saturates
    }
    struct Row { int L; Word w; };
    std::vector<Row> rows;
    for (auto& [x, w] : enumerate_ball(sys, max_len, env_budget())) {
        int L = safe_affine_length(sys, w);
        if (max_affine >= 0 && L > max_affine) continue;
        if (fc_only && !is_fully_commutative(sys, x, env_budget())) continue;
        rows.push_back({L, w});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.L != b.L) return a.L < b.L;
        return shortlex_less(a.w, b.w);
    });
    std::vector<long long> by_len(static_cast<size_t>(max_len) + 1, 0);
    int max_L = 0;
    for (auto& r : rows) max_L = std::max(max_L, r.L);
    std::vector<long long> by_aff(static_cast<size_t>(max_L) + 1, 0);
    for (auto& r : rows) {
        ++by_len[r.w.size()];
        ++by_aff[r.L];
    }
    if (format == "json") {
        json out{{"family", family_name(*fam)}, {"rank", rank},
                 {"max_length", max_len}, {"count", rows.size()}};
        json jr = json::array();
        for (auto& r : rows)
            jr.push_back(json{{"word", word_json(sys, r.w)},
                              {"length", r.w.size()},
                              {"affine_length", r.L}});
        out["rows"] = jr;
        if (series) out["series"] = {{"length", by_len}, {"affine_length", by_aff}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& r : rows)
            std::cout << "l=" << r.w.size() << " L=" << r.L << "  "
                      << (r.w.empty() ? "-" : render_word(sys, r.w)) << "\n";
        std::cout << "count: " << rows.size() << "\n";
        if (series) {
            std::cout << "length series:";
            for (auto c : by_len) std::cout << " " << c;
            std::cout << "\naffine length series:";
            for (auto c : by_aff) std::cout << " " << c;
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opt) {
    std::vector<std::string> names =
        suite == "all" ? suite_names() : std::vector<std::string>{suite};
    json summary = json::array();
    bool all_ok = true;
    for (auto& name : names) {
        CheckReport rep = run_suite(name, opt);
        bool ok = rep.ok();
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << name << " ("
                  << rep.checked << " checks)\n";
        if (!ok)
            std::cout << "  first counterexample: " << rep.failures.front()
                      << "\n";
        summary.push_back(json{{"suite", name}, {"ok", ok},
                               {"checked", rep.checked},
                               {"failures", rep.failures.size()}});
    }
    std::cout << json{{"ok", all_ok}, {"suites", summary}}.dump() << "\n";
    return all_ok ? 0 : 1;
}

int run_map(const std::string& op, int n, const std::string& word_text,
            const std::string& family) {
    json out{{"op", op}, {"rank", n}};
    auto src_info = [&](const CoxeterSystem& sys, const Word& w) {
        out["source"] = json{{"word", word_json(sys, w)},
                             {"length", w.size()},
                             {"affine_length", safe_affine_length(sys, w)}};
    };
    auto img_info = [&](const CoxeterSystem& sys, const Word& w) {
        out["image"] = json{{"word", word_json(sys, w)},
                            {"length", w.size()},
                            {"affine_length", safe_affine_length(sys, w)}};
    };

    if (op == "Ln" || op == "Fn" || op == "Gn") {
        TowerMapId id = op == "Ln"   ? TowerMapId::Ln
                        : op == "Fn" ? TowerMapId::Fn
                                     : TowerMapId::Gn;
        TowerMap map = make_tower_map(id, n + 1);
        Word w = parse_word(map.source, word_text);
        src_info(map.source, w);
        img_info(map.target, tower_image(map, w));
    } else if (op == "beta" || op == "delta") {
        TowerMapId id = op == "beta" ? TowerMapId::Beta : TowerMapId::Delta;
        TowerMap map = make_tower_map(id, n + 1);
        Word w = parse_word(map.source, word_text);
        src_info(map.source, w);
        img_info(map.target, tower_image(map, w));
    } else if (op == "I" || op == "J") {
        auto fam = family_from_name(family);
        if (!fam || (*fam != Family::Btilde && *fam != Family::Dtilde))
            throw DomainError("I and J need --family Btilde or Dtilde");
        CoxeterSystem src = build_system(*fam, n + 1);
        CoxeterSystem dst = build_system(*fam, n + 2);
        Word w = parse_word(src, word_text);
        if (!is_reduced(src, w)) throw DomainError("word is not reduced");
        GroupElement x = element_of(src, w);
        if (!is_fully_commutative(src, x))
            throw DomainError("word is not fully commutative");
        FcForm f = parse_form(src, x);
        FcForm img = op == "I" ? map_I(src, f) : map_J(src, f);
        src_info(src, w);
        Word iw = render_form(dst, img);
        img_info(dst, iw);
        out["source_form"] = form_json(src, f);
        out["image_form"] = form_json(dst, img);
    } else if (op == "Qn" || op == "Pn" || op == "Rn") {
        AlgebraMapId id = op == "Qn"   ? AlgebraMapId::Qn
                          : op == "Pn" ? AlgebraMapId::Pn
                                       : AlgebraMapId::Rn;
        Family fam = op == "Qn"   ? Family::Btilde
                     : op == "Pn" ? Family::Dtilde
                                  : Family::Ctilde;
        CoxeterSystem src = build_system(fam, n + 1);
        Word w = parse_word(src, word_text);
        if (!is_reduced(src, w)) throw DomainError("word is not reduced");
        src_info(src, w);
        HeckeElt img = morphism_image(id, n, w);
        out["image"] = json{{"terms", terms_json(img.system, img.body, false)}};
        if (id != AlgebraMapId::Rn &&
            is_fully_commutative(src, element_of(src, w))) {
            TLElt t = tl_morphism_image(id, n, w);
            out["image_tl"] =
                json{{"terms", terms_json(t.system, t.body, true)}};
        }
    } else {
        throw DomainError("unknown op " + op);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for fully commutative elements of the affine "
                 "types B and D: enumeration, verification, tower maps"};
    app.require_subcommand(1);

    auto* enu = app.add_subcommand("enumerate", "list elements of a ball");
    std::string family, format = "text";
    int rank = 0, max_len = -1, max_affine = -1;
    bool fc_only = false, series = false;
    enu->add_option("--family", family)->required();
    enu->add_option("--rank", rank)->required();
    enu->add_option("--max-length", max_len);
    enu->add_option("--max-affine", max_affine);
    enu->add_flag("--fc-only", fc_only);
    enu->add_option("--format", format)
        ->check(CLI::IsMember({"json", "text"}));
    enu->add_flag("--series", series);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, fixtures = "fixtures";
    int vrank = 4, vmax_len = 8;
    ver->add_option("--suite", suite)->required();
    ver->add_option("--rank", vrank);
    ver->add_option("--max-length", vmax_len);
    ver->add_option("--fixtures", fixtures);

    auto* mp = app.add_subcommand("map", "apply a tower or algebra map");
    std::string op, word_text, mfamily = "Btilde";
    int mrank = 0;
    mp->add_option("--op", op)->required();
    mp->add_option("--rank", mrank)->required();
    mp->add_option("--word", word_text)->required();
    mp->add_option("--family", mfamily);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enu->parsed())
            return run_enumerate(family, rank, max_len, max_affine, fc_only,
                                 format, series);
        if (ver->parsed()) {
            SuiteOptions opt;
            opt.fixtures_dir = fixtures;
            opt.rank = vrank;
            opt.max_len = vmax_len;
            opt.budget = env_budget();
            auto names = suite_names();
            if (suite != "all" &&
                std::find(names.begin(), names.end(), suite) == names.end())
                throw DomainError("unknown suite " + suite);
            return run_verify(suite, opt);
        }
        return run_map(op, mrank, word_text, mfamily);
    } catch (const BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
