#ifndef BCSPH_ROOTDATA_HPP
#define BCSPH_ROOTDATA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bcsph/rational.hpp"

namespace bcsph {

/// Type-BC root data in rank r: positive roots 2e_j, 4e_j, 2(e_i +- e_j)
/// with multiplicity parameters (a, b, iota) attached to the three orbits
/// (2k1 = 2b for 2e_j, 2k2 = iota for 4e_j, 2k3 = a for the pair roots).
struct RootSystemBC {
    int rank = 0;
    Rational a, b, iota;
    std::vector<Rational> rho; // rho[j-1] = iota + b + (r-j) a, strictly decreasing

    Rational rho1() const { return rho.front(); }
};

/// make_root_system validates r >= 1 and a, b, iota > 0 and fills rho.
RootSystemBC make_root_system(int rank, const Rational& a, const Rational& b,
                              const Rational& iota);

/// Weakly decreasing tuple of non-negative integers, padded to rank r.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int rank() const { return static_cast<int>(parts.size()); }
    int weight() const;
    bool empty_partition() const { return weight() == 0; }

    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    /// Weight-graded lexicographic total order; refines dominance.
    bool operator<(const Partition& o) const;

    std::string str() const;
};

enum class Dominance { Less, Equal, Greater, Incomparable };

/// Partial-sum comparison (the natural ordering on partitions).
Dominance dominance_compare(const Partition& p, const Partition& q);

/// p <= q in dominance (partial sums), equality included.
bool dominance_leq(const Partition& p, const Partition& q);

/// The unique partition in the S_r-orbit of a non-negative tuple.
Partition orbit_representative(const std::vector<int>& exponents);

/// All partitions of rank r with weight <= maxWeight in canonical
/// (weight-graded, then lexicographic) order. This is the processing order
/// for Gram-Schmidt and matrix indexing throughout.
std::vector<Partition> partitions_up_to(int rank, int maxWeight);

/// Signed permutation of the coordinates: variable k maps to sign[k] * x_{perm[k]}.
/// 0-based internally; CLI/report output uses 1-based labels.
struct WeylElement {
    std::vector<int> perm;
    std::vector<int8_t> sign;

    int rank() const { return static_cast<int>(perm.size()); }

    static WeylElement identity(int r);
    /// Transposition of i and j, all signs +1.
    static WeylElement s(int r, int i, int j);
    /// x_i -> -x_j, x_j -> -x_i.
    static WeylElement sigma_pair(int r, int i, int j);
    /// x_i -> -x_i.
    static WeylElement sigma(int r, int i);

    /// compose(u, v) acts as u after v.
    static WeylElement compose(const WeylElement& u, const WeylElement& v);

    bool operator==(const WeylElement& o) const { return perm == o.perm && sign == o.sign; }
    bool operator<(const WeylElement& o) const {
        return perm != o.perm ? perm < o.perm : sign < o.sign;
    }

    std::string str() const;
};

/// Full signed-permutation group, r! 2^r elements.
std::vector<WeylElement> enumerate_weyl_group(int rank);

/// The deformed multiplicities attached to the compact-picture weight for a
/// given nu: 2 k2 = 2(2 nu - (1 + iota + b + a(r-1))) + 1,
/// 2 (k1 + k2) = iota + 2b, 2 k3 = a.
struct CompactMultiplicity {
    Rational k1, k2, k3;
};

CompactMultiplicity compact_multiplicity(const RootSystemBC& rs, const Rational& nu);

/// nu must exceed iota + b + a(r-1) for every integral in the pipeline.
bool nu_admissible(const RootSystemBC& rs, const Rational& nu);

} // namespace bcsph

#endif
