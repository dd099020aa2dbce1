#include "equistab/confstab/oracle.hpp"
#include "equistab/errors.hpp"
#include "equistab/gsets.hpp"

#include <doctest.h>

#include <random>

using namespace equistab;

namespace {

SubgroupLattice lat_of(std::vector<std::int64_t> factors) { return enumerate_subgroups(make_group(factors)); }

GSetClass random_gset(std::mt19937& rng, const SubgroupLattice& lat, std::int64_t max_orbits) {
    GSetClass s = empty_gset(lat, lat.full());
    std::uniform_int_distribution<std::int64_t> d(0, max_orbits);
    for (std::size_t h = 0; h < lat.size(); ++h) s.mult[h] = d(rng);
    return s;
}

// Count n-point classes by naive recursion over orbit sizes, written
// independently of enumerate_gsets.
std::int64_t count_classes_recursive(const std::vector<std::int64_t>& orbit_sizes, std::size_t pos, std::int64_t n) {
    if (pos == orbit_sizes.size()) return n == 0 ? 1 : 0;
    std::int64_t total = 0;
    for (std::int64_t m = 0; m * orbit_sizes[pos] <= n; ++m)
        total += count_classes_recursive(orbit_sizes, pos + 1, n - m * orbit_sizes[pos]);
    return total;
}

} // namespace

TEST_CASE("enumerate_gsets: worked cases") {
    SubgroupLattice c2 = lat_of({2});
    auto classes = enumerate_gsets(c2, c2.full(), 3);
    REQUIRE(classes.size() == 2);
    // lexicographic: 3[G/G] first, then [G/e] + [G/G]
    CHECK(classes[0].mult[c2.trivial()] == 0);
    CHECK(classes[0].mult[c2.full()] == 3);
    CHECK(classes[1].mult[c2.trivial()] == 1);
    CHECK(classes[1].mult[c2.full()] == 1);

    CHECK(enumerate_gsets(c2, c2.full(), 0).size() == 1);
    CHECK(gset_cardinality(c2, enumerate_gsets(c2, c2.full(), 0)[0]) == 0);

    // C2, n = 2k: k + 1 classes
    for (std::int64_t k = 0; 2 * k <= 20; ++k)
        CHECK(static_cast<std::int64_t>(enumerate_gsets(c2, c2.full(), 2 * k).size()) == k + 1);
}

TEST_CASE("enumerate_gsets matches the recursive counting oracle") {
    for (auto factors : {std::vector<std::int64_t>{2}, {3}, {4}, {2, 2}, {6}, {8}, {2, 4}}) {
        SubgroupLattice lat = lat_of(factors);
        std::vector<std::int64_t> sizes;
        for (std::size_t h : lat.subgroups_of(lat.full())) sizes.push_back(lat.index_in(h, lat.full()));
        for (std::int64_t n = 0; n <= 10; ++n)
            CHECK(static_cast<std::int64_t>(enumerate_gsets(lat, lat.full(), n).size()) ==
                  count_classes_recursive(sizes, 0, n));
    }
}

TEST_CASE("enumerate_gsets returns each class once with the right cardinality") {
    SubgroupLattice lat = lat_of({2, 2});
    for (std::int64_t n = 0; n <= 8; ++n) {
        auto classes = enumerate_gsets(lat, lat.full(), n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            CHECK(gset_cardinality(lat, classes[i]) == n);
            for (std::size_t j = i + 1; j < classes.size(); ++j) CHECK(!(classes[i] == classes[j]));
        }
    }
}

TEST_CASE("disjoint_union: unit, additivity, cardinality") {
    SubgroupLattice lat = lat_of({4});
    GSetClass empty = empty_gset(lat, lat.full());
    GSetClass free = orbit_gset(lat, lat.full(), lat.trivial());
    CHECK(disjoint_union(lat, free, empty) == free);
    GSetClass two = disjoint_union(lat, free, free);
    CHECK(two.mult[lat.trivial()] == 2);

    std::mt19937 rng(7);
    for (int t = 0; t < 30; ++t) {
        GSetClass a = random_gset(rng, lat, 3), b = random_gset(rng, lat, 3);
        CHECK(gset_cardinality(lat, disjoint_union(lat, a, b)) ==
              gset_cardinality(lat, a) + gset_cardinality(lat, b));
    }
}

TEST_CASE("restrict_gset: worked cases and the concrete orbit oracle") {
    SubgroupLattice c4 = lat_of({4});
    std::size_t c2 = 1;
    GSetClass free4 = orbit_gset(c4, c4.full(), c4.trivial());
    GSetClass r = restrict_gset(c4, free4, c2);
    CHECK(r.ambient == c2);
    CHECK(r.mult[c4.trivial()] == 2); // res [C4/e] = 2 [C2/e]

    // res^G_G is the identity
    SubgroupLattice klein = lat_of({2, 2});
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        GSetClass s = random_gset(rng, klein, 2);
        CHECK(restrict_gset(klein, s, klein.full()) == s);
    }

    // res^{C2xC2}_<a>([G/<b>]) = [<a>/e]
    std::size_t a = klein.node_generated_by({{1, 0}});
    std::size_t b = klein.node_generated_by({{0, 1}});
    GSetClass gb = orbit_gset(klein, klein.full(), b);
    GSetClass res = restrict_gset(klein, gb, a);
    CHECK(res.mult[klein.trivial()] == 1);
    CHECK(orbit_count(res) == 1);
}

TEST_CASE("restrict_gset preserves cardinality and is transitive") {
    for (auto factors : {std::vector<std::int64_t>{8}, {2, 4}, {2, 2, 2}}) {
        SubgroupLattice lat = lat_of(factors);
        std::mt19937 rng(2024);
        for (int t = 0; t < 15; ++t) {
            GSetClass s = random_gset(rng, lat, 2);
            for (std::size_t k = 0; k < lat.size(); ++k) {
                GSetClass sk = restrict_gset(lat, s, k);
                CHECK(gset_cardinality(lat, sk) == gset_cardinality(lat, s));
                for (std::size_t l = 0; l < lat.size(); ++l) {
                    if (!lat.leq(l, k)) continue;
                    CHECK(restrict_gset(lat, sk, l) == restrict_gset(lat, s, l));
                }
            }
        }
    }
}

TEST_CASE("restriction agrees with the concrete K-orbit decomposition") {
    for (auto factors : {std::vector<std::int64_t>{4}, {2, 2}, {6}}) {
        SubgroupLattice lat = lat_of(factors);
        for (std::size_t h = 0; h < lat.size(); ++h) {
            GSetClass orb = orbit_gset(lat, lat.full(), h);
            if (gset_cardinality(lat, orb) > static_cast<std::int64_t>(kOracleSizeBound)) continue;
            for (std::size_t k = 0; k < lat.size(); ++k) {
                // realize the coset space, restrict the action, classify
                ConcreteGSet x = realize_gset(lat, orb);
                ConcreteGSet xk = x;
                xk.ambient = k;
                CHECK(classify_concrete(lat, xk) == restrict_gset(lat, orb, k));
            }
        }
    }
}

TEST_CASE("table of marks: worked cases and triangularity") {
    SubgroupLattice c2 = lat_of({2});
    IntMat m = table_of_marks(c2, c2.full());
    CHECK(m(0, 0) == 2);
    CHECK(m(0, 1) == 1);
    CHECK(m(1, 0) == 0);
    CHECK(m(1, 1) == 1);

    SubgroupLattice c4 = lat_of({4});
    IntMat m4 = table_of_marks(c4, c4.full());
    CHECK(m4(1, 1) == 2); // |(C4/C2)^{C2}| = 2

    for (auto factors : {std::vector<std::int64_t>{2, 4}, {2, 2, 2}, {8}}) {
        SubgroupLattice lat = lat_of(factors);
        IntMat marks = table_of_marks(lat, lat.full());
        for (std::size_t i = 0; i < marks.rows(); ++i) {
            CHECK(marks(i, i) != 0);
            for (std::size_t j = 0; j < i; ++j) CHECK(marks(i, j) == 0);
            // entry(e, H) = [G:H]
            CHECK(marks(0, i) == lat.index_in(lat.subgroups_of(lat.full())[i], lat.full()));
        }
    }
}

TEST_CASE("marks equal concrete fixed-point counts") {
    for (auto factors : {std::vector<std::int64_t>{4}, {2, 2}, {6}}) {
        SubgroupLattice lat = lat_of(factors);
        auto subs = lat.subgroups_of(lat.full());
        IntMat marks = table_of_marks(lat, lat.full());
        for (std::size_t j = 0; j < subs.size(); ++j) {
            ConcreteGSet x = realize_gset(lat, orbit_gset(lat, lat.full(), subs[j]));
            for (std::size_t i = 0; i < subs.size(); ++i)
                CHECK(marks(i, j) == concrete_fixed_points(lat, x, subs[i]));
        }
    }
}

TEST_CASE("orbit product: unit and the C2 doubling case") {
    SubgroupLattice c2 = lat_of({2});
    GSetClass unit = orbit_gset(c2, c2.full(), c2.full());
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        GSetClass s = random_gset(rng, c2, 3);
        CHECK(gset_product(c2, unit, s) == s);
    }
    GSetClass free = orbit_gset(c2, c2.full(), c2.trivial());
    GSetClass sq = gset_product(c2, free, free);
    CHECK(sq.mult[c2.trivial()] == 2); // [G/e] . [G/e] = 2 [G/e]
}

TEST_CASE("marks homomorphism is multiplicative on random pairs") {
    std::mt19937 rng(31337);
    for (auto factors : {std::vector<std::int64_t>{4}, {2, 2}}) {
        SubgroupLattice lat = lat_of(factors);
        for (int t = 0; t < 20; ++t) {
            GSetClass s = random_gset(rng, lat, 1);
            GSetClass u = random_gset(rng, lat, 1);
            GSetClass p = gset_product(lat, s, u);
            for (std::size_t k = 0; k < lat.size(); ++k)
                CHECK(gset_fixed_points(lat, p, k) == gset_fixed_points(lat, s, k) * gset_fixed_points(lat, u, k));
        }
    }
}

TEST_CASE("marks multiplicativity against the concrete product") {
    SubgroupLattice lat = lat_of({2, 2});
    std::mt19937 rng(11);
    int done = 0;
    while (done < 10) {
        GSetClass s = random_gset(rng, lat, 1);
        GSetClass u = random_gset(rng, lat, 1);
        std::int64_t cs = gset_cardinality(lat, s), cu = gset_cardinality(lat, u);
        if (cs == 0 || cu == 0 || cs * cu > static_cast<std::int64_t>(kOracleSizeBound)) continue;
        ConcreteGSet x = realize_gset(lat, s), y = realize_gset(lat, u);
        ConcreteGSet xy = concrete_product(lat, x, y);
        CHECK(classify_concrete(lat, xy) == gset_product(lat, s, u));
        ++done;
    }
}

TEST_CASE("ambient mismatch raises") {
    SubgroupLattice c4 = lat_of({4});
    GSetClass over_g = orbit_gset(c4, c4.full(), c4.trivial());
    GSetClass over_c2 = orbit_gset(c4, 1, c4.trivial());
    CHECK_THROWS_AS(disjoint_union(c4, over_g, over_c2), ValidationError);
    CHECK_THROWS_AS(restrict_gset(c4, over_c2, c4.full()), ValidationError);
}
