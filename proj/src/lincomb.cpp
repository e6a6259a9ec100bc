/*
 * lincomb.cpp
 * -----------
 * Sparse linear combinations and exact rank via fraction-free Bareiss
 * elimination over Z[q].
 */
#include "fc/lincomb.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace fc {

void LinComb::add(const Word& key, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb out = *this;
    out += o;
    return out;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb out = *this;
    for (const auto& [key, c] : o.terms) out.add(key, -c);
    return out;
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [key, c] : o.terms) add(key, c);
    return *this;
}

LinComb LinComb::scaled(const LaurentPoly& c) const {
    LinComb out;
    if (c.is_zero()) return out;
    for (const auto& [key, coeff] : terms) out.add(key, coeff * c);
    return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero()) return LaurentPoly();
    // Work with ordinary polynomials: shift both operands to lowest
    // exponent zero, long-divide over Z, shift the quotient back.
    int ashift = a.min_exp();
    int bshift = b.min_exp();
    LaurentPoly rem = a.shifted(-ashift);
    LaurentPoly den = b.shifted(-bshift);
    LaurentPoly quot;
    int dexp = den.max_exp();
    const BigInt& dlead = den.coeffs.rbegin()->second;
    while (!rem.is_zero()) {
        int rexp = rem.max_exp();
        assert(rexp >= dexp && "inexact Laurent division");
        BigInt qc, rc;
        BigInt::divmod(rem.coeffs.rbegin()->second, dlead, qc, rc);
        assert(rc == BigInt(0) && "inexact coefficient division");
        LaurentPoly term;
        term.coeffs.emplace(rexp - dexp, qc);
        quot += term;
        rem -= term * den;
    }
    return quot.shifted(ashift - bshift);
}

namespace {

using SparseRow = std::map<size_t, LaurentPoly>; // col -> nonzero entry

// Normalize a row: strip the common q-power (clears negative exponents
// too) and divide out the integer content. Both are unit or scalar row
// scalings over the fraction field, so the rank is unchanged.
void normalize_row(SparseRow& row) {
    if (row.empty()) return;
    int low = row.begin()->second.min_exp();
    BigInt g(0);
    for (const auto& [c, e] : row) {
        low = std::min(low, e.min_exp());
        g = BigInt::gcd(g, e.content());
    }
    bool unit_content = g == BigInt(1);
    if (low == 0 && unit_content) return;
    for (auto& [c, e] : row) {
        if (low != 0) e = e.shifted(-low);
        if (!unit_content) e = e.div_coeff(g);
    }
}

// Sparse fraction-free elimination: rows are cross-multiplied against
// the pivot row (p[c] * row - row[c] * p, an integer-polynomial
// operation) and re-normalized, so only rows meeting the pivot column
// ever cost anything. Columns are visited in increasing index order;
// callers that order columns so that row leaders are distinct (as the
// leading-term theorems predict) get an echelon matrix for free.
int sparse_rank(std::vector<SparseRow> rows) {
    for (auto& row : rows) normalize_row(row);

    // Bucket the still-active rows by their leftmost column.
    std::map<size_t, std::vector<size_t>> buckets;
    for (size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].empty()) buckets[rows[i].begin()->first].push_back(i);

    int r = 0;
    while (!buckets.empty()) {
        auto it = buckets.begin();
        size_t col = it->first;
        std::vector<size_t> bucket = std::move(it->second);
        buckets.erase(it);

        // Pivot on the sparsest row to limit fill-in.
        size_t piv = bucket[0];
        for (size_t i : bucket)
            if (rows[i].size() < rows[piv].size()) piv = i;
        const SparseRow& p = rows[piv];
        const LaurentPoly& pc = p.at(col);
        ++r;

        for (size_t i : bucket) {
            if (i == piv) continue;
            SparseRow& row = rows[i];
            LaurentPoly rc = row.at(col);
            for (const auto& [c, e] : p) {
                LaurentPoly v = (row.count(c) ? row[c] * pc : LaurentPoly()) -
                                rc * e;
                if (v.is_zero())
                    row.erase(c);
                else
                    row[c] = std::move(v);
            }
            for (auto& [c, e] : row)
                if (!p.count(c)) e *= pc;
            normalize_row(row);
            if (!row.empty()) buckets[row.begin()->first].push_back(i);
        }
    }
    return r;
}

} // namespace

int rank(const PolyMatrix& m) {
    std::vector<SparseRow> rows(m.row_count());
    for (size_t i = 0; i < m.row_count(); ++i)
        for (size_t j = 0; j < m.rows[i].size(); ++j)
            if (!m.rows[i][j].is_zero()) rows[i].emplace(j, m.rows[i][j]);
    return sparse_rank(std::move(rows));
}

bool check_independent(const std::vector<LinComb>& elements) {
    std::set<Word> keys;
    for (const LinComb& e : elements)
        for (const auto& [key, c] : e.terms) keys.insert(key);

    // Longest keys first: the leading-term results give each image a
    // unique longest key, so this ordering yields an echelon matrix
    // and the elimination certifies the rank with almost no work.
    std::vector<Word> order(keys.begin(), keys.end());
    std::sort(order.begin(), order.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::map<Word, size_t> col;
    for (const Word& k : order) col.emplace(k, col.size());

    std::vector<SparseRow> rows(elements.size());
    for (size_t i = 0; i < elements.size(); ++i)
        for (const auto& [key, c] : elements[i].terms)
            rows[i].emplace(col.at(key), c);
    return sparse_rank(std::move(rows)) == static_cast<int>(elements.size());
}

} // namespace fc
