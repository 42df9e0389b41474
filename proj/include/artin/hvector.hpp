#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/types.hpp"

namespace artin {

// Hilbert function of a standard graded artinian algebra: a finite sequence
// of positive integers with leading entry 1. The last index is the socle
// degree e. Internal zeros are not representable (they do not occur).
class HVector {
public:
    explicit HVector(IntVec entries);

    const IntVec& entries() const { return entries_; }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }
    int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }

    std::string to_string() const { return format_vector(entries_); }
    static HVector parse(const std::string& text);

    friend bool operator==(const HVector& a, const HVector& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const HVector& a, const HVector& b) {
        return a.entries_ < b.entries_;  // lexicographic, for deterministic output
    }

private:
    IntVec entries_;
};

// Socle dimensions by degree: s_0 = 0, last entry positive, length >= 3
// (socle degree at least 2).
class SocleVector {
public:
    explicit SocleVector(IntVec entries);

    const IntVec& entries() const { return entries_; }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }
    int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }
    Int type() const;  // sum of entries for i >= 1

    std::string to_string() const { return format_vector(entries_); }
    static SocleVector parse(const std::string& text);

    friend bool operator==(const SocleVector& a, const SocleVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    IntVec entries_;
};

// (r, s): embedding dimension and socle-vector. Only r >= 2 is checked here;
// whether r >= min.emb.dim(s) holds is not decidable from the data and is
// surfaced by the bound machinery as infeasibility when detectable.
struct PairRS {
    int r;
    SocleVector socle;

    PairRS(int r_, SocleVector s);
    int socle_degree() const { return socle.socle_degree(); }
};

// Macaulay growth test for a plain integer list. Entry 0 must be 1; negative
// entries fail; a zero entry forces all later entries to be zero.
bool is_O_sequence(const IntVec& v);
bool is_O_sequence(const HVector& h);

// (1, v_1 - v_0, ..., v_e - v_{e-1}); entries may be zero or negative, so
// the result is a plain list rather than an HVector.
IntVec first_difference(const IntVec& v);
IntVec first_difference(const HVector& v);

// A vector is differentiable when its first difference is non-negative and
// is itself an O-sequence. Differentiable implies O-sequence.
bool is_differentiable(const IntVec& v);
bool is_differentiable(const HVector& v);

bool is_symmetric(const HVector& h);

// Entrywise partial order on vectors of equal length.
enum class Cmp { equal, greater_equal, less_equal, incomparable };
Cmp compare(const HVector& h, const HVector& g);

// Pareto frontier: all v with no strictly dominating w in the set.
// Duplicates are collapsed; output sorted lexicographically.
std::vector<HVector> maximal_elements(std::vector<HVector> set);

}  // namespace artin
