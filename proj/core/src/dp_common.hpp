#pragma once

// Internal helpers shared by the chain DPs (bct.cpp, diverse_min.cpp).

#include <cstdint>
#include <vector>

#include "dtri/bct.hpp"
#include "dtri/geometry.hpp"
#include "dtri/measure.hpp"

namespace dtri::detail {

inline constexpr std::int64_t kIntInf = std::int64_t{1} << 60;

// Lexicographic (primary, secondary) with the 1e-9 tolerance on the real
// primary component. Secondary is exact.
inline bool value_less(const LexValue& a, const LexValue& b) {
    if (a.primary < b.primary - kValueTol) return true;
    if (b.primary < a.primary - kValueTol) return false;
    return a.secondary < b.secondary;
}

inline LexValue value_combine(Combiner c, const LexValue& a, const LexValue& b) {
    switch (c) {
        case Combiner::Sum: return {a.primary + b.primary, a.secondary + b.secondary};
        case Combiner::Min: return value_less(a, b) ? a : b;
        case Combiner::Max: return value_less(a, b) ? b : a;
    }
    return a;
}

inline LexValue value_identity(Combiner c) {
    if (c == Combiner::Min) return {kInf, 0};
    return {0.0, 0};
}

// Bitset over the polygon's diagonal universe; canonical lexicographic order
// of the sorted diagonal list equals "lowest differing bit wins".
struct DiagSet {
    std::vector<std::uint64_t> w;

    void resize(std::size_t words) { w.assign(words, 0); }
    void set(int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
    void merge(const DiagSet& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    friend bool operator==(const DiagSet& a, const DiagSet& b) { return a.w == b.w; }
};

// True iff a precedes b canonically (first differing diagonal belongs to a).
inline bool canon_less(const DiagSet& a, const DiagSet& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i) {
        std::uint64_t diff = a.w[i] ^ b.w[i];
        if (diff) return (a.w[i] & (diff & ~(diff - 1))) != 0;
    }
    return false;
}

inline std::vector<Diagonal> diagset_to_list(const DiagSet& s,
                                             const std::vector<Diagonal>& universe) {
    std::vector<Diagonal> out;
    for (std::size_t b = 0; b < universe.size(); ++b)
        if (s.w[b >> 6] & (std::uint64_t{1} << (b & 63))) out.push_back(universe[b]);
    return out;
}

}  // namespace dtri::detail
