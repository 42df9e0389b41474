#include "artin/binom.hpp"

#include <stdexcept>

namespace artin {

Int binomial(const Int& n, const Int& k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k == 0 || k == n) return 1;
    if (!k.fits_ulong_p()) throw std::invalid_argument("binomial: k out of range");
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return out;
}

Int binomial(long n, long k) { return binomial(Int(n), Int(k)); }

Int dim_poly(int r, int d) {
    if (r < 1) throw std::invalid_argument("dim_poly: r must be positive");
    if (d < 0) return 0;
    return binomial(Int(r - 1 + d), Int(d));
}

Int BinExpansion::value() const {
    Int sum = 0;
    for (const auto& t : terms) sum += binomial(t.top, Int(t.bottom));
    return sum;
}

std::string BinExpansion::to_string() const {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += "+";
        out += "C(" + t.top.get_str() + "," + std::to_string(t.bottom) + ")";
    }
    return out;
}

BinExpansion expand(const Int& n, int i) {
    if (n < 1) throw std::invalid_argument("expand: n must be positive");
    if (i < 1) throw std::invalid_argument("expand: degree must be positive");
    BinExpansion exp;
    exp.degree = i;
    Int rem = n;
    for (int k = i; k >= 1 && rem > 0; --k) {
        // Largest top with C(top, k) <= rem; rem >= 1 guarantees top >= k.
        Int top = k;
        Int c = 1;  // C(k, k)
        while (true) {
            // C(top+1, k) = C(top, k) * (top+1) / (top+1-k)
            Int next = c * (top + 1) / (top + 1 - k);
            if (next > rem) break;
            ++top;
            c = next;
        }
        exp.terms.push_back({top, k});
        rem -= c;
    }
    return exp;
}

Int shift(const BinExpansion& exp, int a) {
    Int sum = 0;
    for (const auto& t : exp.terms) {
        int bottom = t.bottom + a;
        if (bottom < 0)
            throw std::invalid_argument("shift: offset drives a bottom index negative");
        Int top = t.top + a;  // top >= bottom always, since t.top >= t.bottom
        if (bottom == 0) {
            sum += 1;         // C(m, 0) = 1 for m >= 0
            continue;
        }
        sum += binomial(top, Int(bottom));
    }
    return sum;
}

Int macaulay_growth(const Int& h, int d) {
    if (h < 1) throw std::invalid_argument("macaulay_growth: h must be positive");
    if (d < 1) throw std::invalid_argument("macaulay_growth: d must be positive");
    return shift(expand(h, d), +1);
}

Int macaulay_lower(const Int& a, int b) {
    if (a < 1) throw std::invalid_argument("macaulay_lower: a must be positive");
    if (b < 2) throw std::invalid_argument("macaulay_lower: b must be at least 2");
    return shift(expand(a, b), -1);
}

}  // namespace artin
