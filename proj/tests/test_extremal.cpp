#include <doctest.h>

#include <array>

#include "fixtures.hpp"
#include "mpw/extremal.hpp"
#include "oracle.hpp"

using namespace mpw;

namespace {

long long greedy_level_fill(int s, long long m) {
    const long long q = m / s, r = m % s;
    return s * q * (q + 1) / 2 + (q + 1) * r;
}

int faces_with_vertices(const Embedding& e, std::array<int, 3> want) {
    std::sort(want.begin(), want.end());
    int hits = 0;
    for (const auto& f : faces(e)) {
        std::array<int, 3> got{f[0], f[1], f[2]};
        std::sort(got.begin(), got.end());
        if (got == want) ++hits;
    }
    return hits;
}

}  // namespace

TEST_SUITE("extremal") {

TEST_CASE("T_n base cases") {
    CHECK_THROWS_AS(construct_tn(2), std::invalid_argument);

    auto t3 = construct_tn(3);
    CHECK(t3.vertex_count() == 3);
    CHECK(t3.edge_count() == 3);

    auto t4 = construct_tn(4);
    CHECK(wiener_index(t4) == 6);
    CHECK(t4.to_graph().is_complete());
}

TEST_CASE("T_n validates for every order up to 200") {
    for (int n = 3; n <= 200; ++n) {
        auto e = construct_tn(n);
        CHECK(e.vertex_count() == n);
        CHECK(validate_triangulation(e).ok);
    }
}

TEST_CASE("T_n attains the closed-form maximum") {
    CHECK(wiener_index(construct_tn(9)) == 54);
    CHECK(wiener_index(construct_tn(10)) == 72);
    CHECK(wiener_index(construct_tn(11)) == 94);
    for (int n = 3; n <= 120; ++n)
        CHECK(wiener_index(construct_tn(n)) == wiener_upper_bound(n));
}

TEST_CASE("the ring core keeps exactly two terminal triangle faces") {
    for (int k : {2, 3, 5, 9}) {
        const int n = 3 * k;
        auto e = construct_tn(n);
        CHECK(faces_with_vertices(e, {0, 1, 2}) == 1);
        CHECK(faces_with_vertices(e, {n - 3, n - 2, n - 1}) == 1);
    }
    // k = 1: the single triangle bounds both terminal faces
    CHECK(faces_with_vertices(construct_tn(3), {0, 1, 2}) == 2);
}

TEST_CASE("either terminal face yields the same class when n = 1 (mod 3)") {
    for (int n : {4, 7, 10, 13, 16}) {
        const int k = (n - 1) / 3;
        auto base = construct_tn(n - 1);
        Face first, last;
        for (const auto& f : faces(base)) {
            std::array<int, 3> got{f[0], f[1], f[2]};
            std::sort(got.begin(), got.end());
            if (got == std::array<int, 3>{0, 1, 2} && first.empty()) first = f;
            if (got == std::array<int, 3>{3 * k - 3, 3 * k - 2, 3 * k - 1}) last = f;
        }
        REQUIRE_FALSE(first.empty());
        REQUIRE_FALSE(last.empty());
        auto on_first = insert_vertex_in_face(base, first);
        auto on_last = insert_vertex_in_face(base, last);
        CHECK(canonical_code(on_first) == canonical_code(on_last));
        CHECK(canonical_code(on_first) == canonical_code(construct_tn(n)));
    }
}

TEST_CASE("wiener_upper_bound residue cases") {
    CHECK(wiener_upper_bound(9) == 54);
    CHECK(wiener_upper_bound(10) == 72);
    CHECK(wiener_upper_bound(11) == 94);
    CHECK_THROWS_AS(wiener_upper_bound(2), std::invalid_argument);
    for (long long n = 3; n <= 1000; ++n)
        CHECK(wiener_upper_bound(static_cast<int>(n)) == (n * n * n + 3 * n * n) / 18);
}

TEST_CASE("sigma_bound closed forms") {
    CHECK(sigma_bound(3, 6) == 9);
    CHECK(sigma_bound(4, 4) == 4);
    CHECK(sigma_bound(5, 7) == 9);
    CHECK_THROWS_AS(sigma_bound(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(sigma_bound(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(sigma_bound(3, -1), std::invalid_argument);
    for (int s = 3; s <= 5; ++s)
        for (long long m = 0; m <= 10000; ++m)
            CHECK(sigma_bound(s, m) == greedy_level_fill(s, m));
}

TEST_CASE("minimizer construction") {
    CHECK_THROWS_AS(construct_min_wiener(3), std::invalid_argument);
    CHECK(construct_min_wiener(4).to_graph().is_complete());
    CHECK(wiener_index(construct_min_wiener(6)) == 18);
    CHECK(wiener_index(construct_min_wiener(12)) == 102);
    for (int n = 4; n <= 80; ++n) {
        auto e = construct_min_wiener(n);
        CHECK(validate_triangulation(e).ok);
        const long long expected = static_cast<long long>(n - 2) * (n - 2) + 2;
        CHECK(wiener_index(e) == expected);
        CHECK(expected == static_cast<long long>(n) * (n - 1) - (3 * n - 6));
        // diameter 2: the hub reaches everything, so no BFS level index exceeds 2
        auto g = e.to_graph();
        int probe[1] = {0};
        auto part = bfs_partition(g, probe);
        CHECK(part.eccentricity() <= 2);
    }
}

TEST_CASE("conjectured bounds evaluate exactly") {
    CHECK(conjecture_bound(4, 6) == Rational(18));
    CHECK(conjecture_bound(4, 8) == Rational(38));
    CHECK(conjecture_bound(5, 15) == Rational(189));
    CHECK(conjecture_bound(5, 12) == Rational(116));
    CHECK(conjecture_bound(4, 7) == Rational(27));
    CHECK(conjecture_bound(5, 14) == Rational(161));
    CHECK_THROWS_AS(conjecture_bound(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_bound(5, 11), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_bound(3, 20), std::invalid_argument);
}

TEST_CASE("octahedron beats T_6 on status tightness") {
    // sigma(v) for the octahedron meets sigma_4(5) exactly
    auto oct = fixtures::octahedron().to_graph();
    int v[1] = {0};
    CHECK(status(oct, v) == sigma_bound(4, 5));
}

}  // TEST_SUITE
