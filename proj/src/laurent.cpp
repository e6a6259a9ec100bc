#include "fc/laurent.hpp"

#include <cassert>
#include <sstream>

namespace fc {

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) coeffs[0] = BigInt(constant);
}

LaurentPoly LaurentPoly::monomial(long long c, int e) {
    LaurentPoly r;
    if (c != 0) r.coeffs[e] = BigInt(c);
    return r;
}

void LaurentPoly::prune(int e) {
    auto it = coeffs.find(e);
    if (it != coeffs.end() && it->second.is_zero()) coeffs.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.coeffs) {
        coeffs[e] += c;
        prune(e);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += -o;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs) r.coeffs[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs)
        for (const auto& [e2, c2] : o.coeffs) {
            r.coeffs[e1 + e2] += c1 * c2;
            r.prune(e1 + e2);
        }
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    auto a = coeffs.begin(), b = o.coeffs.begin();
    for (; a != coeffs.end() && b != o.coeffs.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == coeffs.end() && b != o.coeffs.end();
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r;
    for (const auto& [ex, c] : coeffs) r.coeffs[ex + e] = c;
    return r;
}

int LaurentPoly::min_exp() const {
    assert(!coeffs.empty());
    return coeffs.begin()->first;
}

int LaurentPoly::max_exp() const {
    assert(!coeffs.empty());
    return coeffs.rbegin()->first;
}

bool LaurentPoly::is_q_power() const {
    return coeffs.size() == 1 && coeffs.begin()->second == BigInt(1);
}

BigInt LaurentPoly::content() const {
    BigInt g;
    for (const auto& [e, c] : coeffs) g = BigInt::gcd(g, c);
    return g;
}

LaurentPoly LaurentPoly::div_coeff(const BigInt& d) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs) r.coeffs[e] = c.div_exact(d);
    return r;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt s;
    for (const auto& [e, c] : coeffs) s += c;
    return s;
}

std::string LaurentPoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest power first.
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.to_string();
        if (!first && cs[0] != '-') os << "+";
        first = false;
        if (e == 0) {
            os << cs;
        } else {
            if (cs == "-1")
                os << "-";
            else if (cs != "1")
                os << cs << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace fc
