#include "artin/bounds.hpp"

#include <algorithm>
#include <cassert>

#include "artin/binom.hpp"

namespace artin {

IntVec r_numbers(const PairRS& pair) {
    const int e = pair.socle_degree();
    IntVec out;
    out.reserve(e + 1);
    for (int d = 0; d <= e; ++d) {
        Int v = dim_poly(pair.r, d);
        for (int i = d; i <= e; ++i) v -= dim_poly(pair.r, i - d) * pair.socle[i];
        out.push_back(v);
    }
    return out;
}

int b_index(const PairRS& pair) {
    IntVec r = r_numbers(pair);
    for (std::size_t d = 1; d < r.size(); ++d)
        if (r[d] >= 0) return static_cast<int>(d);
    // r_e >= 0 always holds, so this is unreachable for valid socle-vectors.
    throw std::logic_error("b_index: no non-negative r_d");
}

HVector fl_bound(const PairRS& pair) {
    IntVec r = r_numbers(pair);
    IntVec h;
    h.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int n = dim_poly(pair.r, static_cast<int>(i));
        h.push_back(std::min(n - r[i], n));
    }
    return HVector(std::move(h));
}

HVector zanello_bound(const PairRS& pair) {
    const int e = pair.socle_degree();
    IntVec r = r_numbers(pair);
    IntVec h;
    h.reserve(e + 1);
    h.push_back(1);
    h.push_back(pair.r);
    for (int i = 2; i <= e; ++i) {
        Int avail = h[i - 1] - pair.socle[i - 1];
        if (avail <= 0)
            throw infeasible_error(i, "socle consumes the whole algebra before degree " +
                                          std::to_string(i));
        Int grown = macaulay_growth(avail, i - 1);
        h.push_back(std::min(grown, dim_poly(pair.r, i) - r[i]));
    }
    return HVector(std::move(h));
}

bool bounds_coincide(const PairRS& pair) {
    const int b = b_index(pair);
    for (int i = 0; i <= b - 2; ++i)
        if (pair.socle[i] != 0) return false;
    IntVec r = r_numbers(pair);
    Int cap = dim_poly(pair.r, b - 1) - macaulay_lower(dim_poly(pair.r, b) - r[b], b);
    return pair.socle[b - 1] <= cap;
}

namespace {

// The growth branch of the Zanello recursion at degree i, with the stated
// degree-0 and degree-1 conventions.
Int recursion_value(const PairRS& pair, const HVector& h, int i) {
    if (i == 0) return 1;
    if (i == 1) return pair.r;
    Int avail = h[i - 1] - pair.socle[i - 1];
    assert(avail >= 1);
    return macaulay_growth(avail, i - 1);
}

}  // namespace

std::pair<int, int> c_t_indices(const PairRS& pair) {
    const int e = pair.socle_degree();
    HVector h = zanello_bound(pair);
    IntVec r = r_numbers(pair);
    int c = 0;
    for (int i = 0; i <= e; ++i)
        if (h[i] == dim_poly(pair.r, i)) c = i;
    int t = 0;
    for (int i = 0; i <= e; ++i) {
        Int rec = recursion_value(pair, h, i);
        if (h[i] == rec && rec < dim_poly(pair.r, i) - r[i]) t = i;
    }
    return {c, t};
}

AdmissibleCase admissible_case(const PairRS& pair) {
    auto [c, t] = c_t_indices(pair);
    if (c == t + 1) return AdmissibleCase::case_i;
    if (c == t) {
        HVector h = zanello_bound(pair);
        Int room = dim_poly(pair.r, c) - h[c + 1];
        if (pair.socle[c] <= std::max(room, Int(0))) return AdmissibleCase::case_ii;
        return AdmissibleCase::none;
    }
    if (c <= t - 1 && pair.socle[c] >= dim_poly(pair.r, c) - c)
        return AdmissibleCase::case_iii;
    return AdmissibleCase::none;
}

bool small_socle_admissible(const PairRS& pair) {
    const int b = b_index(pair);
    for (int i = 0; i <= b - 2; ++i)
        if (pair.socle[i] != 0) return false;
    IntVec r = r_numbers(pair);
    Int room = dim_poly(pair.r, b - 1) - (dim_poly(pair.r, b) - r[b]);
    return pair.socle[b - 1] <= std::max(room, Int(0));
}

SocleVector two_entry_socle(int p, const Int& s_p, int e) {
    if (p < 1 || p >= e) throw std::invalid_argument("two_entry_socle: need 1 <= p < e");
    if (s_p < 1) throw std::invalid_argument("two_entry_socle: s_p must be positive");
    IntVec s(e + 1, 0);
    s[p] = s_p;
    s[e] = 1;
    return SocleVector(std::move(s));
}

namespace {

// Shared by two_entry_compressed (p < e/2) and symmetric_upper_bound:
// generic through p, maximal growth of N(r,p) - s_p up to the midpoint,
// symmetric tail with h_{e-p} = N(r,p) - s_p.
HVector symmetric_growth_vector(int r, int p, const Int& s_p, int e) {
    Int k = dim_poly(r, p) - s_p;
    if (k < 1)
        throw infeasible_error(p + 1, "socle entry fills the whole degree-" +
                                          std::to_string(p) + " piece");
    const int mid = e / 2;
    IntVec h(e + 1);
    for (int i = 0; i <= p; ++i) h[i] = dim_poly(r, i);
    BinExpansion ex = expand(k, p);
    for (int a = 1; a <= mid - p; ++a) h[p + a] = shift(ex, a);
    for (int i = mid + 1; i <= e; ++i) h[i] = (i == e - p) ? k : h[e - i];
    return HVector(std::move(h));
}

}  // namespace

HVector two_entry_compressed(int r, int p, const Int& s_p, int e) {
    if (r < 2) throw std::invalid_argument("two_entry_compressed: r must be at least 2");
    if (p < 1 || p >= e) throw std::invalid_argument("two_entry_compressed: need 1 <= p < e");
    if (s_p < 1 || s_p > r - 1)
        throw std::invalid_argument("two_entry_compressed: need 1 <= s_p <= r-1");
    if (2 * p >= e) return fl_bound(PairRS(r, two_entry_socle(p, s_p, e)));
    return symmetric_growth_vector(r, p, s_p, e);
}

SymmetricBound symmetric_upper_bound(int r, int p, const Int& s_p, int e) {
    if (r < 2) throw std::invalid_argument("symmetric_upper_bound: r must be at least 2");
    if (p < 1 || 2 * p >= e)
        throw std::invalid_argument("symmetric_upper_bound: need 1 <= p < e/2");
    if (s_p < 1) throw std::invalid_argument("symmetric_upper_bound: s_p must be positive");
    return {symmetric_growth_vector(r, p, s_p, e), s_p <= r - 1};
}

BoundProfile bound_profile(const PairRS& pair) {
    auto [c, t] = c_t_indices(pair);
    return BoundProfile{pair,        r_numbers(pair), b_index(pair), fl_bound(pair),
                        zanello_bound(pair), c,       t,             bounds_coincide(pair)};
}

}  // namespace artin
