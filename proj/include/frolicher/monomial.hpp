#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace frolicher {

/// Generator slots as bitmasks; supports up to 64 complex generators.
using GeneratorMask = std::uint64_t;

/// A basis wedge monomial over the generators f_1..f_m and their conjugates
/// ~f_1..~f_m. Bit k-1 of `holo` is f_k, bit k-1 of `anti` is ~f_k. The
/// canonical factor order is all holomorphic generators ascending, then all
/// anti-holomorphic generators ascending; every sign in the library is
/// relative to that order.
struct Monomial {
    GeneratorMask holo = 0;
    GeneratorMask anti = 0;

    int p() const { return std::popcount(holo); }
    int q() const { return std::popcount(anti); }
    int degree() const { return p() + q(); }

    auto operator<=>(const Monomial&) const = default;
};

/// Number of set bits of `mask` strictly above position `bit`.
inline int bitsAbove(GeneratorMask mask, int bit)
{
    return bit >= 63 ? 0 : std::popcount(mask >> (bit + 1));
}

/// Number of set bits of `mask` strictly below position `bit`.
inline int bitsBelow(GeneratorMask mask, int bit)
{
    return bit == 0 ? 0 : std::popcount(mask << (64 - bit));
}

/// Inversions created by concatenating two ascending generator lists:
/// #{(a,b) : a in `first`, b in `second`, a > b}. The masks must be disjoint.
inline int crossInversions(GeneratorMask first, GeneratorMask second)
{
    int inv = 0;
    while (second != 0) {
        int j = std::countr_zero(second);
        second &= second - 1;
        inv += bitsAbove(first, j);
    }
    return inv;
}

/// Koszul sign of a * b relative to canonical order: 0 if the monomials
/// share a generator, otherwise +1/-1.
inline int wedgeSign(const Monomial& a, const Monomial& b)
{
    if ((a.holo & b.holo) != 0 || (a.anti & b.anti) != 0)
        return 0;
    // Reorder [H_a A_a H_b A_b] -> [H_a H_b A_a A_b], then merge each block.
    int swaps = a.q() * b.p();
    swaps += crossInversions(a.holo, b.holo);
    swaps += crossInversions(a.anti, b.anti);
    return (swaps & 1) != 0 ? -1 : 1;
}

/// Exact binomial coefficient; throws on int64 overflow.
std::int64_t binomial(int n, int k);

/// Colexicographic rank of a popcount-k mask among all popcount-k masks,
/// i.e. its position in increasing mask order.
std::int64_t combinationRank(GeneratorMask mask);

}  // namespace frolicher
