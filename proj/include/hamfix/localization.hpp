#pragma once

#include <array>

#include "hamfix/laurent.hpp"
#include "hamfix/tfd.hpp"

namespace hamfix {

enum class Integrand { One, C1, C1Cubed };

int degree_of(Integrand a);

// Summand of the localized integral over a six-manifold coming from one component.
LaurentPoly contribution(const FixedComponentSpec& fc, Integrand alpha);
LaurentPoly integrate(const TFD& tfd, Integrand alpha);
long long chern_number(const TFD& tfd);

// Perfect Morse-Bott Poincare polynomial, coefficients of t^0..t^6.
std::array<int, 7> betti(const TFD& tfd);
std::array<int, 7> betti(const std::vector<FixedComponentSpec>& components);
bool is_palindromic(const std::array<int, 7>& b);

}  // namespace hamfix
