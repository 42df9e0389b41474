#pragma once

#include <string>
#include <vector>

#include "artin/types.hpp"

namespace artin {

// Binomial coefficient with the conventions used throughout: C(n,0) = 1 and
// C(n,k) = 0 for k > n. Arguments must be non-negative.
Int binomial(const Int& n, const Int& k);
Int binomial(long n, long k);

// N(r,d) = C(r-1+d, d), the dimension of the degree-d piece of a polynomial
// ring in r variables.
Int dim_poly(int r, int d);

// The i-binomial expansion of a positive integer n:
//   n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
// with n_i > n_{i-1} > ... > n_j >= j >= 1. Tops are strictly decreasing,
// bottoms consecutive down to some j >= 1, and the expansion is unique.
struct BinExpansion {
    struct Term {
        Int top;
        int bottom;
    };

    int degree = 0;  // the i above
    std::vector<Term> terms;

    Int value() const;          // sum of C(top, bottom)
    std::string to_string() const;  // "C(5,3)+C(4,2)"
};

BinExpansion expand(const Int& n, int i);

// The shifted evaluation sum_t C(top_t + a, bottom_t + a). Terms whose
// bottom lands on 0 contribute 1 when top + a >= 0. Rejects any a that
// drives a bottom negative.
Int shift(const BinExpansion& exp, int a);

// Macaulay's maximal growth: the largest admissible h_{d+1} given h_d = h.
Int macaulay_growth(const Int& h, int d);

// The least s with a <= macaulay_growth(s, b-1); equals the down-shifted
// b-binomial expansion of a (Bigatti-Geramita).
Int macaulay_lower(const Int& a, int b);

}  // namespace artin
