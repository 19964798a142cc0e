#include "nsg/json_io.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace nsg;

TEST_CASE("make_semigroup validates and normalizes") {
    auto s = NumericalSemigroup::make({11, 6, 10, 6});
    CHECK(s.generators() == std::vector<std::uint64_t>{6, 10, 11});

    CHECK_THROWS_AS(NumericalSemigroup::make({}), EmptyGenerators);
    CHECK_THROWS_AS(NumericalSemigroup::make({3, 0}), ZeroGenerator);
    try {
        NumericalSemigroup::make({2, 4});
        FAIL("expected NonCoprimeGenerators");
    } catch (const NonCoprimeGenerators& e) {
        CHECK(e.gcd == 2);
    }

    auto full = NumericalSemigroup::make({1});
    CHECK(full.gaps().gaps.empty());
    CHECK(full.frobenius() == -1);
}

TEST_CASE("contains") {
    auto s = NumericalSemigroup::make({4, 6, 9});
    CHECK_FALSE(s.contains(5));
    CHECK(s.contains(15)); // 6 + 9
    CHECK(s.contains(0));
    CHECK_FALSE(s.contains(-3));
    CHECK(s.contains(1000));
}

TEST_CASE("gaps") {
    auto s35 = NumericalSemigroup::make({3, 5});
    CHECK(s35.gaps().gaps == std::vector<std::uint64_t>{1, 2, 4, 7});
    CHECK(s35.genus() == 4);
    CHECK(s35.frobenius() == 7);

    auto s23 = NumericalSemigroup::make({2, 3});
    CHECK(s23.gaps().gaps == std::vector<std::uint64_t>{1});

    auto full = NumericalSemigroup::make({1});
    CHECK(full.genus() == 0);
    CHECK(full.frobenius() == -1);
}

TEST_CASE("apery_set") {
    auto s35 = NumericalSemigroup::make({3, 5});
    CHECK(s35.apery_set(3).elements == std::vector<std::uint64_t>{0, 10, 5});

    auto s469 = NumericalSemigroup::make({4, 6, 9});
    auto ap = s469.apery_set(4);
    std::multiset<std::uint64_t> elems(ap.elements.begin(), ap.elements.end());
    CHECK(elems == std::multiset<std::uint64_t>{0, 6, 9, 15});

    auto s23 = NumericalSemigroup::make({2, 3});
    CHECK(s23.apery_set(2).elements == std::vector<std::uint64_t>{0, 3});

    CHECK_THROWS_AS(s35.apery_set(0), ZeroModulus);
    CHECK_THROWS_AS(s35.apery_set(7), ModulusNotInSemigroup);
}

TEST_CASE("frobenius and genus via apery") {
    auto s35 = NumericalSemigroup::make({3, 5});
    CHECK(s35.frobenius_via_apery(3) == 7);
    CHECK(s35.genus_via_apery(3) == 4);

    auto s469 = NumericalSemigroup::make({4, 6, 9});
    CHECK(s469.frobenius_via_apery(4) == 11);
    CHECK(s469.frobenius_via_apery(6) == 11); // t-independence
    CHECK(s469.genus_via_apery(4) == 6);
    CHECK(s469.genus_via_apery(6) == 6);

    auto full = NumericalSemigroup::make({1});
    CHECK(full.frobenius_via_apery(1) == -1);
    CHECK(full.genus_via_apery(1) == 0);
}

TEST_CASE("is_symmetric") {
    CHECK(NumericalSemigroup::make({3, 5}).is_symmetric());
    CHECK(NumericalSemigroup::make({4, 6, 9}).is_symmetric());
    CHECK_FALSE(NumericalSemigroup::make({3, 5, 7}).is_symmetric());
    CHECK_FALSE(NumericalSemigroup::make({1}).is_symmetric());
}

TEST_CASE("random semigroups against the brute-force oracle") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 40; ++it) {
        auto s = random_semigroup(rng);
        auto expected_gaps = oracle::gaps(s.generators());
        CHECK(s.gaps().gaps == expected_gaps);

        std::int64_t f = s.frobenius();
        // Apery invariants for a few valid moduli
        int tested = 0;
        for (std::uint64_t t = 1; t <= 40 && tested < 5; ++t) {
            if (!s.contains(static_cast<std::int64_t>(t))) continue;
            ++tested;
            auto ap = s.apery_set(t);
            REQUIRE(ap.elements.size() == t);
            CHECK(ap.elements[0] == 0);
            for (std::uint64_t r = 0; r < t; ++r)
                CHECK(ap.elements[static_cast<std::size_t>(r)] % t == r);
            CHECK(ap.elements == oracle::apery(s.generators(), t));
            CHECK(s.frobenius_via_apery(t) == oracle::frobenius(s.generators()));
            CHECK(s.genus_via_apery(t) == expected_gaps.size());
        }

        // F <= 2g - 1 with equality iff symmetric (checked by definition)
        std::int64_t g2 = 2 * static_cast<std::int64_t>(s.genus()) - 1;
        CHECK(f <= g2);
        if (f >= 0) {
            bool sym_def = true;
            for (std::int64_t n = 0; n <= f; ++n)
                if (s.contains(n) == s.contains(f - n)) { sym_def = false; break; }
            CHECK(sym_def == s.is_symmetric());
            CHECK(sym_def == (f == g2));
        }
    }
}

TEST_CASE("set-equality lemma on random semigroups") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 25; ++it) {
        auto s = random_semigroup(rng);
        std::int64_t bound = s.frobenius() + static_cast<std::int64_t>(s.min_generator());
        for (std::int64_t t = 1; t <= bound; ++t) {
            if (!s.contains(t)) continue;
            CHECK(set_equalities_hold(s, static_cast<std::uint64_t>(t)));
        }
    }
}

TEST_CASE("json shapes") {
    auto s = NumericalSemigroup::make({3, 5});
    auto js = to_json(s);
    CHECK(js["generators"] == std::vector<std::uint64_t>{3, 5});

    auto jg = to_json(s.gaps());
    CHECK(jg["gaps"] == std::vector<std::uint64_t>{1, 2, 4, 7});
    CHECK(jg["genus"] == 4);
    CHECK(jg["frobenius"] == 7);

    auto ja = to_json(s.apery_set(3));
    CHECK(ja["t"] == 3);
    CHECK(ja["elements"] == std::vector<std::uint64_t>{0, 10, 5});
}
