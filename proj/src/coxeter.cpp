#include "fc/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace fc {

std::string family_name(Family f) {
    switch (f) {
        case Family::D: return "D";
        case Family::Btilde: return "Btilde";
        case Family::Ctilde: return "Ctilde";
        case Family::Dtilde: return "Dtilde";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "D") return Family::D;
    if (s == "Btilde") return Family::Btilde;
    if (s == "Ctilde") return Family::Ctilde;
    if (s == "Dtilde") return Family::Dtilde;
    return std::nullopt;
}

int QuadInt::sign() const {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // Mixed signs: compare |a| with |b|*sqrt(2), i.e. a^2 with 2 b^2.
    // Equality is impossible since sqrt(2) is irrational.
    long long a2 = a * a, b2 = 2 * b * b;
    if (a > 0) return a2 > b2 ? 1 : -1;
    return a2 > b2 ? -1 : 1;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int CoxeterSystem::n() const {
    return family == Family::D ? rank - 1 : rank - 2;
}

bool CoxeterSystem::has_order4_edge() const {
    return family == Family::Btilde || family == Family::Ctilde;
}

int CoxeterSystem::gen_sb1() const {
    return family == Family::Ctilde ? -1 : 0;
}

int CoxeterSystem::gen_sigma(int i) const {
    if (i < 1 || i > n()) return -1;
    return i;
}

int CoxeterSystem::gen_sbn() const {
    return family == Family::Dtilde ? rank - 1 : -1;
}

int CoxeterSystem::gen_t() const {
    return (family == Family::Btilde || family == Family::Ctilde) ? rank - 1 : -1;
}

int CoxeterSystem::gen_s0() const {
    return family == Family::Ctilde ? 0 : -1;
}

int CoxeterSystem::affine_gen() const {
    if (family == Family::Dtilde) return gen_sbn();
    return gen_t(); // -1 for D
}

CoxeterSystem build_system(Family family, int rank) {
    int min_rank = (family == Family::Btilde || family == Family::Dtilde) ? 4 : 3;
    if (rank < min_rank)
        throw RankError("rank " + std::to_string(rank) + " below minimum " +
                        std::to_string(min_rank) + " for family " + family_name(family));
    CoxeterSystem sys;
    sys.family = family;
    sys.rank = rank;
    int n = sys.n();

    if (family == Family::Ctilde) {
        sys.tokens.push_back("s0");
        for (int i = 1; i <= n; ++i) sys.tokens.push_back("s" + std::to_string(i));
        sys.tokens.push_back("t");
    } else {
        sys.tokens.push_back("sb1");
        for (int i = 1; i <= n; ++i) sys.tokens.push_back("s" + std::to_string(i));
        if (family == Family::Btilde) sys.tokens.push_back("t");
        if (family == Family::Dtilde) sys.tokens.push_back("sb" + std::to_string(n));
    }

    sys.cox.assign(rank, std::vector<int>(rank, 2));
    for (int i = 0; i < rank; ++i) sys.cox[i][i] = 1;
    auto set_m = [&](int a, int b, int m) { sys.cox[a][b] = sys.cox[b][a] = m; };

    if (family == Family::Ctilde) {
        // Chain s0 - s1 - ... - sn - t, order 4 at both ends.
        set_m(0, 1, 4);
        for (int i = 1; i < n; ++i) set_m(i, i + 1, 3);
        set_m(n, rank - 1, 4);
    } else {
        // Fork: sb1 and s1 both attached to s2, chain above.
        set_m(sys.gen_sb1(), sys.gen_sigma(2), 3);
        for (int i = 1; i < n; ++i) set_m(sys.gen_sigma(i), sys.gen_sigma(i + 1), 3);
        if (family == Family::Btilde) set_m(sys.gen_sigma(n), sys.gen_t(), 4);
        if (family == Family::Dtilde) set_m(sys.gen_sigma(n - 1), sys.gen_sbn(), 3);
    }
    return sys;
}

// --- GroupElement -------------------------------------------------------

GroupElement GroupElement::identity(const CoxeterSystem& sys) {
    GroupElement e;
    e.rank = sys.rank;
    e.mat.assign(static_cast<size_t>(e.rank) * e.rank, QuadInt(0));
    for (int i = 0; i < e.rank; ++i) e.mat[static_cast<size_t>(i) * e.rank + i] = QuadInt(1);
    e.inv = e.mat;
    return e;
}

static QuadInt two_cos(int m) {
    switch (m) {
        case 2: return QuadInt(0);
        case 3: return QuadInt(1);
        case 4: return QuadInt(0, 1);
    }
    assert(false && "unsupported bond order");
    return QuadInt(0);
}

GroupElement GroupElement::generator(const CoxeterSystem& sys, int s) {
    GroupElement g = identity(sys);
    // s sends alpha_s to -alpha_s and alpha_c to alpha_c + 2cos(pi/m(s,c)) alpha_s.
    g.mat[static_cast<size_t>(s) * g.rank + s] = QuadInt(-1);
    for (int c = 0; c < g.rank; ++c) {
        if (c == s) continue;
        g.mat[static_cast<size_t>(c) * g.rank + s] = two_cos(sys.m(s, c));
    }
    g.inv = g.mat;
    return g;
}

static std::vector<QuadInt> mat_mul(int rank, const std::vector<QuadInt>& a,
                                    const std::vector<QuadInt>& b) {
    std::vector<QuadInt> r(static_cast<size_t>(rank) * rank, QuadInt(0));
    for (int c = 0; c < rank; ++c)
        for (int k = 0; k < rank; ++k) {
            QuadInt bk = b[static_cast<size_t>(c) * rank + k];
            if (bk.is_zero()) continue;
            for (int row = 0; row < rank; ++row) {
                QuadInt av = a[static_cast<size_t>(k) * rank + row];
                if (av.is_zero()) continue;
                size_t idx = static_cast<size_t>(c) * rank + row;
                r[idx] = r[idx] + av * bk;
            }
        }
    return r;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    assert(rank == o.rank);
    GroupElement r;
    r.rank = rank;
    r.mat = mat_mul(rank, mat, o.mat);
    r.inv = mat_mul(rank, o.inv, inv);
    return r;
}

GroupElement GroupElement::inverse() const {
    GroupElement r;
    r.rank = rank;
    r.mat = inv;
    r.inv = mat;
    return r;
}

bool GroupElement::is_identity() const {
    for (int c = 0; c < rank; ++c)
        for (int r = 0; r < rank; ++r) {
            const QuadInt& v = mat[static_cast<size_t>(c) * rank + r];
            if (r == c ? v != QuadInt(1) : !v.is_zero()) return false;
        }
    return true;
}

static bool column_nonpositive(int rank, const std::vector<QuadInt>& m, int c) {
    for (int r = 0; r < rank; ++r)
        if (m[static_cast<size_t>(c) * rank + r].sign() > 0) return false;
    return true;
}

bool GroupElement::right_descent(int s) const {
    // l(ws) < l(w) iff w(alpha_s) is a negative root.
    return column_nonpositive(rank, mat, s);
}

bool GroupElement::left_descent(int s) const {
    // l(sw) < l(w) iff w^{-1}(alpha_s) is a negative root.
    return column_nonpositive(rank, inv, s);
}

// --- Word plumbing ------------------------------------------------------

Word parse_word(const CoxeterSystem& sys, const std::string& text) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    size_t pos = 0;
    while (is >> tok) {
        auto it = std::find(sys.tokens.begin(), sys.tokens.end(), tok);
        if (it == sys.tokens.end())
            throw ParseError("unknown generator token '" + tok + "' at position " +
                                 std::to_string(pos),
                             pos);
        w.push_back(static_cast<int>(it - sys.tokens.begin()));
        ++pos;
    }
    return w;
}

std::string render_word(const CoxeterSystem& sys, const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += sys.tokens[w[i]];
    }
    return out;
}

void check_word(const CoxeterSystem& sys, const Word& w) {
    for (int g : w)
        if (g < 0 || g >= sys.rank)
            throw AlphabetError("letter " + std::to_string(g) + " outside alphabet of rank " +
                                std::to_string(sys.rank));
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

int count_occurrences(const Word& w, int gen) {
    return static_cast<int>(std::count(w.begin(), w.end(), gen));
}

// --- Core operations ----------------------------------------------------

GroupElement element_of(const CoxeterSystem& sys, const Word& w) {
    check_word(sys, w);
    GroupElement x = GroupElement::identity(sys);
    for (int g : w) x = x * GroupElement::generator(sys, g);
    return x;
}

Word canonical_word(const CoxeterSystem& sys, const GroupElement& x) {
    Word out;
    GroupElement cur = x;
    while (!cur.is_identity()) {
        int s = -1;
        for (int g = 0; g < sys.rank; ++g)
            if (cur.left_descent(g)) {
                s = g;
                break;
            }
        assert(s >= 0 && "non-identity element with empty left descent set");
        out.push_back(s);
        cur = GroupElement::generator(sys, s) * cur;
    }
    return out;
}

int length(const CoxeterSystem& sys, const GroupElement& x) {
    return static_cast<int>(canonical_word(sys, x).size());
}

std::vector<int> descents(const CoxeterSystem& sys, const GroupElement& x, Side side) {
    std::vector<int> out;
    for (int g = 0; g < sys.rank; ++g)
        if (side == Side::Left ? x.left_descent(g) : x.right_descent(g)) out.push_back(g);
    return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
    check_word(sys, w);
    GroupElement cur = GroupElement::identity(sys);
    for (int g : w) {
        if (cur.right_descent(g)) return false;
        cur = cur * GroupElement::generator(sys, g);
    }
    return true;
}

std::vector<GroupElement> phi_multiset(const CoxeterSystem& sys, const Word& w) {
    check_word(sys, w);
    std::vector<GroupElement> hs;
    GroupElement prefix = GroupElement::identity(sys);
    for (int g : w) {
        GroupElement gen = GroupElement::generator(sys, g);
        hs.push_back(prefix * gen * prefix.inverse());
        prefix = prefix * gen;
    }
    return hs;
}

bool is_reduced_phi(const CoxeterSystem& sys, const Word& w) {
    auto hs = phi_multiset(sys, w);
    std::set<std::vector<QuadInt>> seen;
    for (const auto& h : hs)
        if (!seen.insert(h.mat).second) return false;
    return true;
}

std::vector<Word> commutation_class(const CoxeterSystem& sys, const Word& w, size_t budget) {
    if (!is_reduced(sys, w)) throw NotReducedError("commutation_class requires a reduced word");
    std::set<Word> seen{w};
    std::vector<Word> queue{w};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        Word cur = queue[qi];
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (!sys.commutes(cur[i], cur[i + 1])) continue;
            std::swap(cur[i], cur[i + 1]);
            if (seen.insert(cur).second) {
                if (seen.size() > budget)
                    throw BudgetError("commutation class exceeds budget");
                queue.push_back(cur);
            }
            std::swap(cur[i], cur[i + 1]);
        }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    return out;
}

static bool has_braid_factor(const CoxeterSystem& sys, const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        int x = w[i], y = w[i + 1];
        int m = sys.m(x, y);
        if (m == 3 && i + 2 < w.size() && w[i + 2] == x) return true;
        if (m == 4 && i + 3 < w.size() && w[i + 2] == x && w[i + 3] == y) return true;
    }
    return false;
}

bool is_fully_commutative(const CoxeterSystem& sys, const Word& reduced_word, size_t budget) {
    auto cls = commutation_class(sys, reduced_word, budget);
    for (const auto& v : cls)
        if (has_braid_factor(sys, v)) return false;
    return true;
}

bool is_fully_commutative(const CoxeterSystem& sys, const GroupElement& x, size_t budget) {
    return is_fully_commutative(sys, canonical_word(sys, x), budget);
}

std::vector<std::pair<GroupElement, Word>> enumerate_ball(const CoxeterSystem& sys, int max_len,
                                                          size_t budget) {
    std::vector<std::pair<GroupElement, Word>> out;
    std::vector<GroupElement> gens;
    for (int g = 0; g < sys.rank; ++g) gens.push_back(GroupElement::generator(sys, g));

    // Level-by-level BFS. Extending the ShortLex-minimal word of each
    // element on the right and keeping the lexicographically least
    // candidate per new element yields ShortLex-minimal words again,
    // because every prefix of a ShortLex-minimal word is itself minimal.
    std::map<GroupElement, Word> level{{GroupElement::identity(sys), {}}};
    size_t total = 0;
    for (int len = 0; len <= max_len && !level.empty(); ++len) {
        total += level.size();
        if (total > budget) throw BudgetError("enumeration ball exceeds budget");
        std::vector<std::pair<GroupElement, Word>> sorted(level.begin(), level.end());
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        for (auto& e : sorted) out.push_back(e);

        std::map<GroupElement, Word> next;
        if (len == max_len) break;
        for (const auto& [x, w] : level) {
            for (int g = 0; g < sys.rank; ++g) {
                if (x.right_descent(g)) continue;
                GroupElement y = x * gens[g];
                Word wy = w;
                wy.push_back(g);
                auto it = next.find(y);
                if (it == next.end())
                    next.emplace(y, wy);
                else if (wy < it->second)
                    it->second = wy;
            }
        }
        level = std::move(next);
    }
    return out;
}

int affine_length_of_word(const CoxeterSystem& sys, const Word& w) {
    int ag = sys.affine_gen();
    if (ag < 0) return 0;
    return count_occurrences(w, ag);
}

int affine_length(const CoxeterSystem& sys, const GroupElement& x) {
    if (sys.family == Family::Dtilde && !is_fully_commutative(sys, x))
        throw NotFCError("affine length in type D-tilde is defined for fully commutative elements only");
    return affine_length_of_word(sys, canonical_word(sys, x));
}

} // namespace fc
