#pragma once

#include <utility>

#include "artin/hvector.hpp"
#include "artin/types.hpp"

namespace artin {

// r_d = N(r,d) - sum_{i=d..e} N(r,i-d) * s_i for d = 0..e. Always r_0 < 0,
// r_e >= 0 and the sequence is strictly increasing.
IntVec r_numbers(const PairRS& pair);

// The unique 1 <= b <= e with r_b >= 0 and r_{b-1} < 0.
int b_index(const PairRS& pair);

// Froeberg-Laksov upper bound: h_i = min{ N(r,i) - r_i, N(r,i) }.
HVector fl_bound(const PairRS& pair);

// Zanello's sharper upper bound: h_0 = 1, h_1 = r, then
//   h_i = min{ macaulay_growth(h_{i-1} - s_{i-1}, i-1), N(r,i) - r_i }.
// Throws infeasible_error when h_{i-1} - s_{i-1} drops to zero before the
// top degree (the socle consumes the whole algebra; no algebra with this
// (r,s) exists).
HVector zanello_bound(const PairRS& pair);

// Whether the two upper bounds agree: s_0 = ... = s_{b-2} = 0 and
// s_{b-1} <= N(r,b-1) - macaulay_lower(N(r,b) - r_b, b).
bool bounds_coincide(const PairRS& pair);

// c: largest index where the Zanello bound is generic (h_c = N(r,c)).
// t: largest index where the growth branch of the recursion wins strictly.
// Degenerate conventions: the degree-1 recursion value is r and the
// degree-0 one is 1.
std::pair<int, int> c_t_indices(const PairRS& pair);

// Sufficient conditions under which the Zanello bound is attained by an
// algebra (so a generalized compressed algebra exists):
//   case_i    c = t+1
//   case_ii   c = t   and s_c <= max{ N(r,c) - h_{c+1}, 0 }
//   case_iii  c <= t-1 and s_c >= N(r,c) - c
enum class AdmissibleCase { case_i, case_ii, case_iii, none };
AdmissibleCase admissible_case(const PairRS& pair);

// Weaker sufficient condition keyed to b only: s_0 = ... = s_{b-2} = 0 and
// s_{b-1} <= max{ N(r,b-1) - (N(r,b) - r_b), 0 }. When it holds the
// (coincident) upper bound is admissible.
bool small_socle_admissible(const PairRS& pair);

// The h-vector of the generalized compressed algebra for the two-entry
// socle (s_p at degree p, s_e = 1), valid for 1 <= s_p <= r-1:
//   p >= e/2: the Froeberg-Laksov bound of the pair;
//   p <  e/2: generic through p, then max growth of N(r,p) - s_p, with a
//             symmetric tail and h_{e-p} = N(r,p) - s_p.
HVector two_entry_compressed(int r, int p, const Int& s_p, int e);

// Same formula as the p < e/2 branch above but with no cap on s_p. For
// s_p >= r it is only an upper bound; admissible_known records whether the
// constructive case applies.
struct SymmetricBound {
    HVector bound;
    bool admissible_known;
};
SymmetricBound symmetric_upper_bound(int r, int p, const Int& s_p, int e);

// Everything keyed to one pair, bundled for serialization.
struct BoundProfile {
    PairRS pair;
    IntVec r_values;
    int b;
    HVector fl;
    HVector zanello;
    int c;
    int t;
    bool coincide;
};
BoundProfile bound_profile(const PairRS& pair);  // throws infeasible_error

SocleVector two_entry_socle(int p, const Int& s_p, int e);

}  // namespace artin
