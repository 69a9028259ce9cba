#include <doctest.h>

#include <set>

#include "bcsph/rootdata.hpp"

using namespace bcsph;

TEST_CASE("rho from the multiplicity data") {
    // (r=2, a=2, b=1, iota=1) -> rho = (4, 2)
    RootSystemBC rs = make_root_system(2, Rational(2), Rational(1), Rational(1));
    CHECK(rs.rho[0] == Rational(4));
    CHECK(rs.rho[1] == Rational(2));
    // rank 1: rho = iota + b
    RootSystemBC rs1 = make_root_system(1, Rational(2), Rational(1), Rational(1));
    CHECK(rs1.rho[0] == Rational(2));
    // (r=3, a=1, b=1/2, iota=1) -> rho = (7/2, 5/2, 3/2)
    RootSystemBC rs3 = make_root_system(3, Rational(1), Rational(1, 2), Rational(1));
    CHECK(rs3.rho[0] == Rational(7, 2));
    CHECK(rs3.rho[1] == Rational(5, 2));
    CHECK(rs3.rho[2] == Rational(3, 2));
}

TEST_CASE("root system parameter validation") {
    CHECK_THROWS_AS(make_root_system(0, Rational(1), Rational(1), Rational(1)),
                    ParameterError);
    CHECK_THROWS_AS(make_root_system(2, Rational(0), Rational(1), Rational(1)),
                    ParameterError);
    CHECK_THROWS_AS(make_root_system(2, Rational(1), Rational(-1, 2), Rational(1)),
                    ParameterError);
}

TEST_CASE("rho is strictly decreasing with spread a(r-1)") {
    unsigned long long state = 99;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return 1 + static_cast<long long>((state >> 33) % 9);
    };
    for (int r = 1; r <= 4; ++r) {
        for (int trial = 0; trial < 20; ++trial) {
            Rational a(next(), next()), b(next(), next()), io(next(), next());
            RootSystemBC rs = make_root_system(r, a, b, io);
            for (int j = 1; j < r; ++j) CHECK(rs.rho[j - 1] > rs.rho[j]);
            CHECK(rs.rho[0] - rs.rho[r - 1] == (r - 1) * a);
        }
    }
}

TEST_CASE("dominance comparisons") {
    Partition p({1, 1}), q({2, 0});
    CHECK(dominance_compare(p, q) == Dominance::Less);
    CHECK(dominance_compare(q, p) == Dominance::Greater);
    CHECK(dominance_compare(q, q) == Dominance::Equal);
    // Pure partial-sum reading also covers unequal weights.
    CHECK(dominance_compare(Partition({2, 2, 0}), Partition({3, 1, 1})) ==
          Dominance::Less);
    CHECK(dominance_compare(Partition({3, 3, 0}), Partition({4, 1, 1})) ==
          Dominance::Incomparable);
    CHECK_THROWS_AS(dominance_compare(Partition({1}), Partition({1, 0})),
                    ParameterError);
}

TEST_CASE("dominance restricted to equal weight is a partial order") {
    for (int r = 1; r <= 3; ++r) {
        for (int w = 0; w <= 6; ++w) {
            std::vector<Partition> all;
            for (const Partition& p : partitions_up_to(r, w))
                if (p.weight() == w) all.push_back(p);
            for (const Partition& p : all) {
                CHECK(dominance_compare(p, p) == Dominance::Equal);
                for (const Partition& q : all) {
                    Dominance pq = dominance_compare(p, q);
                    // antisymmetry
                    if (pq == Dominance::Less)
                        CHECK(dominance_compare(q, p) == Dominance::Greater);
                    if (pq == Dominance::Equal) CHECK(p == q);
                    // transitivity
                    for (const Partition& s : all) {
                        if (pq == Dominance::Less &&
                            dominance_compare(q, s) == Dominance::Less)
                            CHECK(dominance_compare(p, s) == Dominance::Less);
                    }
                }
            }
        }
    }
}

TEST_CASE("orbit representative sorts descending") {
    CHECK(orbit_representative({0, 2, 1}) == Partition({2, 1, 0}));
    CHECK(orbit_representative({1, 1, 1}) == Partition({1, 1, 1}));
    CHECK(orbit_representative({0, 0, 5}) == Partition({5, 0, 0}));
    CHECK_THROWS_AS(orbit_representative({1, -1}), ParameterError);
}

TEST_CASE("canonical partition order refines dominance") {
    std::vector<Partition> list = partitions_up_to(3, 5);
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j)
            CHECK(dominance_compare(list[j], list[i]) != Dominance::Less);
}

TEST_CASE("weyl group enumeration and generator involutions") {
    for (int r = 1; r <= 4; ++r) {
        std::vector<WeylElement> g = enumerate_weyl_group(r);
        std::set<WeylElement> uniq(g.begin(), g.end());
        long expected = 1;
        for (int k = 2; k <= r; ++k) expected *= k;
        expected <<= r;
        CHECK(static_cast<long>(uniq.size()) == expected);
        // closure on a sample
        for (size_t i = 0; i < g.size(); i += 3)
            for (size_t j = 0; j < g.size(); j += 5)
                CHECK(uniq.count(WeylElement::compose(g[i], g[j])) == 1);
    }
    int r = 3;
    WeylElement id = WeylElement::identity(r);
    CHECK(WeylElement::compose(WeylElement::s(r, 0, 2), WeylElement::s(r, 0, 2)) == id);
    CHECK(WeylElement::compose(WeylElement::sigma_pair(r, 0, 1),
                               WeylElement::sigma_pair(r, 0, 1)) == id);
    CHECK(WeylElement::compose(WeylElement::sigma(r, 1), WeylElement::sigma(r, 1)) == id);
}

TEST_CASE("compact multiplicities satisfy the defining relations") {
    RootSystemBC rs = make_root_system(2, Rational(2), Rational(1), Rational(1));
    Rational nu(6);
    CompactMultiplicity k = compact_multiplicity(rs, nu);
    CHECK(2 * k.k2 == 2 * (2 * nu - (1 + rs.iota + rs.b + (rs.rank - 1) * rs.a)) + 1);
    CHECK(2 * (k.k1 + k.k2) == rs.iota + 2 * rs.b);
    CHECK(2 * k.k3 == rs.a);
    CHECK(k.k1 + k.k2 >= Rational(0));
    CHECK(k.k1.sign() < 0); // the deformed k1 goes negative for admissible nu
}
