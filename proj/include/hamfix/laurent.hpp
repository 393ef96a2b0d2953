#pragma once

#include <map>
#include <string>

#include "hamfix/rational.hpp"

namespace hamfix {

// Finitely supported sum of c_d x^d; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(const Rational& c, int degree);

    Rational coeff(int degree) const;
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::string to_string() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator*(const Rational& s, const LaurentPoly& p);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

private:
    void add_term(int d, const Rational& c);
    std::map<int, Rational> terms_;
};

}  // namespace hamfix
