#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

// All domain arithmetic is exact. Graded-piece dimensions N(r,d) and the
// shifted binomial sums overflow 64-bit words already for moderate r, d.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

// A socle-vector consumes the whole algebra before its top degree; the
// offending degree is recorded.
class infeasible_error : public std::runtime_error {
public:
    infeasible_error(int degree, const std::string& what)
        : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

// An enumeration was asked to search beyond its configured budget. Kept
// distinct from "searched and found nothing".
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Canonical text form of a vector: "(1,3,6,10)". parse accepts optional
// whitespace between tokens.
std::string format_vector(const IntVec& v);
IntVec parse_vector(const std::string& text);

}  // namespace artin
