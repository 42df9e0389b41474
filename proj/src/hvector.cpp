#include "artin/hvector.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "artin/binom.hpp"

namespace artin {

std::string format_vector(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    out += ")";
    return out;
}

IntVec parse_vector(const std::string& text) {
    IntVec out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument("vector must start with '('");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ')') return out;  // "()"
    while (true) {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("expected integer in vector");
        out.emplace_back(text.substr(start, i - start));
        skip_ws();
        if (i >= text.size()) throw std::invalid_argument("unterminated vector");
        if (text[i] == ')') break;
        if (text[i] != ',') throw std::invalid_argument("expected ',' or ')' in vector");
        ++i;
    }
    ++i;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters after vector");
    return out;
}

HVector::HVector(IntVec entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("h-vector must be nonempty");
    if (entries_[0] != 1) throw std::invalid_argument("h-vector must start with 1");
    for (const Int& x : entries_)
        if (x < 1) throw std::invalid_argument("h-vector entries must be positive");
}

HVector HVector::parse(const std::string& text) { return HVector(parse_vector(text)); }

SocleVector::SocleVector(IntVec entries) : entries_(std::move(entries)) {
    if (entries_.size() < 3)
        throw std::invalid_argument("socle-vector needs socle degree at least 2");
    if (entries_[0] != 0) throw std::invalid_argument("socle-vector must start with 0");
    if (entries_.back() <= 0)
        throw std::invalid_argument("socle-vector must end with a positive entry");
    for (const Int& x : entries_)
        if (x < 0) throw std::invalid_argument("socle-vector entries must be non-negative");
}

SocleVector SocleVector::parse(const std::string& text) {
    return SocleVector(parse_vector(text));
}

Int SocleVector::type() const {
    Int t = 0;
    for (std::size_t i = 1; i < entries_.size(); ++i) t += entries_[i];
    return t;
}

PairRS::PairRS(int r_, SocleVector s) : r(r_), socle(std::move(s)) {
    if (r < 2) throw std::invalid_argument("embedding dimension must be at least 2");
}

bool is_O_sequence(const IntVec& v) {
    if (v.empty() || v[0] != 1) return false;
    for (const Int& x : v)
        if (x < 0) return false;
    for (std::size_t d = 1; d + 1 < v.size(); ++d) {
        if (v[d] == 0) {
            if (v[d + 1] != 0) return false;  // the algebra has died
            continue;
        }
        if (v[d + 1] > macaulay_growth(v[d], static_cast<int>(d))) return false;
    }
    return true;
}

bool is_O_sequence(const HVector& h) { return is_O_sequence(h.entries()); }

IntVec first_difference(const IntVec& v) {
    IntVec d;
    d.reserve(v.size());
    d.push_back(1);
    for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
    return d;
}

IntVec first_difference(const HVector& v) { return first_difference(v.entries()); }

bool is_differentiable(const IntVec& v) {
    if (v.empty() || v[0] != 1) return false;
    IntVec d = first_difference(v);
    for (const Int& x : d)
        if (x < 0) return false;
    return is_O_sequence(d);
}

bool is_differentiable(const HVector& v) { return is_differentiable(v.entries()); }

bool is_symmetric(const HVector& h) {
    const IntVec& v = h.entries();
    for (std::size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
        if (v[i] != v[j]) return false;
    return true;
}

Cmp compare(const HVector& h, const HVector& g) {
    if (h.size() != g.size())
        throw std::invalid_argument("compare: vectors must have equal length");
    bool ge = true, le = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] < g[i]) ge = false;
        if (h[i] > g[i]) le = false;
    }
    if (ge && le) return Cmp::equal;
    if (ge) return Cmp::greater_equal;
    if (le) return Cmp::less_equal;
    return Cmp::incomparable;
}

std::vector<HVector> maximal_elements(std::vector<HVector> set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    std::vector<HVector> out;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < set.size() && !dominated; ++j) {
            if (i == j) continue;
            Cmp c = compare(set[j], set[i]);
            if (c == Cmp::greater_equal) dominated = true;
        }
        if (!dominated) out.push_back(set[i]);
    }
    return out;  // already sorted
}

}  // namespace artin
