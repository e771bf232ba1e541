#ifndef SPINORLAB_INDEX_SET_HPP
#define SPINORLAB_INDEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace spinorlab {

/// Subsets of {1,..,n} are stored as bitmasks: bit k (0-based) stands for the
/// index k+1. Basis monomials e_I keep their factors sorted ascending, so all
/// signs below are transposition counts against that canonical order.
using IndexMask = std::uint32_t;

constexpr int set_card(IndexMask m) { return std::popcount(m); }
constexpr bool set_even(IndexMask m) { return (std::popcount(m) & 1) == 0; }
constexpr IndexMask bits_below(int index1) { return (IndexMask{1} << (index1 - 1)) - 1; }
constexpr IndexMask full_mask(int n) { return (IndexMask{1} << n) - 1; }
constexpr bool set_contains(IndexMask m, int index1) { return (m >> (index1 - 1)) & 1u; }

/// Sign of e_i ^ e_I relative to e_{I u {i}}: (-1)^{#{j in I : j < i}}.
inline int insert_sign(int index1, IndexMask m) {
    return (std::popcount(m & bits_below(index1)) & 1) ? -1 : 1;
}

/// Sign of f_i -| e_I for i in I: (-1)^{pos(i,I)+1}.
inline int remove_sign(int index1, IndexMask m) {
    return (std::popcount(m & bits_below(index1)) & 1) ? -1 : 1;
}

/// Sign of e_I ^ e_J as (-1)^{inversions of the concatenation}; 0 overlap is
/// the caller's concern (check I & J first).
inline int shuffle_sign(IndexMask i, IndexMask j) {
    int inv = 0;
    IndexMask rest = j;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        inv += std::popcount(i >> (b + 1));
    }
    return (inv & 1) ? -1 : 1;
}

inline std::vector<int> set_indices(IndexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

}  // namespace spinorlab

#endif
