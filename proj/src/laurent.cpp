#include "hamfix/laurent.hpp"

namespace hamfix {

LaurentPoly LaurentPoly::monomial(const Rational& c, int degree) {
    LaurentPoly p;
    p.add_term(degree, c);
    return p;
}

void LaurentPoly::add_term(int d, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + hamfix::to_string(it->second) + ")";
        if (it->first != 0) out += "x^" + std::to_string(it->first);
    }
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

LaurentPoly operator*(const Rational& s, const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [d, c] : p.terms_) r.add_term(d, s * c);
    return r;
}

}  // namespace hamfix
