#include "mpw/extremal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mpw {

namespace {

// Ring labels for the 3|n core: a_i, b_i, c_i -> 3(i-1)+0, +1, +2.
enum Cls { A = 0, B = 1, C = 2 };

int ring_label(Cls cls, int i) { return 3 * (i - 1) + cls; }

// Counterclockwise rotation patterns around interior vertices; entries
// whose ring index leaves [1,k] are dropped at the terminal rings.
Embedding construct_rings(int k) {
    std::vector<std::vector<int>> rot(3 * k);
    auto fill = [&](Cls cls, int i, std::initializer_list<std::pair<Cls, int>> pattern) {
        auto& r = rot[ring_label(cls, i)];
        for (auto [pc, pi] : pattern)
            if (pi >= 1 && pi <= k) r.push_back(ring_label(pc, pi));
    };
    for (int i = 1; i <= k; ++i) {
        fill(A, i, {{A, i + 1}, {B, i + 1}, {B, i}, {A, i - 1}, {C, i}, {C, i + 1}});
        fill(B, i, {{C, i}, {B, i - 1}, {A, i - 1}, {A, i}, {B, i + 1}, {C, i + 1}});
        fill(C, i, {{A, i}, {A, i - 1}, {C, i - 1}, {B, i - 1}, {B, i}, {C, i + 1}});
    }
    return Embedding::from_rotations(std::move(rot));
}

// First face (in trace order) whose vertex set matches.
Face find_face(const Embedding& e, std::array<int, 3> want) {
    std::sort(want.begin(), want.end());
    for (auto& f : faces(e)) {
        std::array<int, 3> got{f[0], f[1], f[2]};
        std::sort(got.begin(), got.end());
        if (got == want) return f;
    }
    throw std::logic_error("construct_tn: terminal face missing");
}

}  // namespace

Embedding construct_tn(int n) {
    if (n < 3) throw std::invalid_argument("construct_tn: need n >= 3");
    const int r = n % 3;
    const int core = n - r;  // largest multiple of 3 not above n
    const int k = core / 3;
    Embedding e = construct_rings(k);
    const std::array<int, 3> first{ring_label(A, 1), ring_label(B, 1), ring_label(C, 1)};
    const std::array<int, 3> last{ring_label(A, k), ring_label(B, k), ring_label(C, k)};
    if (r >= 1) e = insert_vertex_in_face(e, find_face(e, first));
    if (r == 2) e = insert_vertex_in_face(e, find_face(e, last));
    return e;
}

long long wiener_upper_bound(int n) {
    if (n < 3) throw std::invalid_argument("wiener_upper_bound: need n >= 3");
    const long long nn = n;
    static constexpr long long kDrop[3] = {0, 4, 2};
    const long long v = nn * nn * (nn + 3) - kDrop[n % 3];
    if (v % 18 != 0) throw std::logic_error("wiener_upper_bound: residue case broken");
    return v / 18;
}

long long sigma_bound(int s, long long m) {
    if (s < 3 || s > 5) throw std::invalid_argument("sigma_bound: s must be 3, 4 or 5");
    if (m < 0) throw std::invalid_argument("sigma_bound: negative vertex count");
    long long add = 0;
    switch (s) {
        case 3:
            add = (m % 3 == 0) ? 0 : 2;
            break;
        case 4: {
            static constexpr long long t[4] = {0, 3, 4, 3};
            add = t[m % 4];
            break;
        }
        default: {
            static constexpr long long t[5] = {0, 4, 6, 6, 4};
            add = t[m % 5];
            break;
        }
    }
    const long long v = m * m + s * m + add;
    if (v % (2 * s) != 0) throw std::logic_error("sigma_bound: residue case broken");
    return v / (2 * s);
}

Embedding construct_min_wiener(int n) {
    if (n < 4) throw std::invalid_argument("construct_min_wiener: need n >= 4");
    const int k = n - 1;  // rim length
    const int hub = n - 1;
    std::vector<std::array<int, 3>> tris;
    tris.reserve(2 * n - 4);
    for (int j = 0; j < k; ++j) tris.push_back({j, (j + 1) % k, hub});
    for (int t = 1; t + 1 < k; ++t) tris.push_back({t + 1, t, 0});
    return embedding_from_oriented_triangles(n, tris);
}

Rational conjecture_bound(int k, int n) {
    const long long nn = n;
    const Rational n1{nn}, n2{nn * nn}, n3{nn * nn * nn};
    if (k == 4) {
        if (n < 6) throw std::invalid_argument("conjecture_bound: k=4 needs n >= 6");
        Rational base = n3 / 24 + n2 / 4;
        switch (n % 4) {
            case 0:
            case 2:
                return base + n1 / 3 - 2;
            case 1:
                return base + n1 * Rational{5, 24} - Rational{3, 2};
            default:
                return base + n1 * Rational{5, 24} - 1;
        }
    }
    if (k == 5) {
        if (n < 12) throw std::invalid_argument("conjecture_bound: k=5 needs n >= 12");
        Rational base = n3 / 30 + n2 * Rational{3, 10} - n1 * Rational{23, 15};
        static const Rational tail[5] = {Rational{32}, Rational{156, 5}, Rational{168, 5},
                                         Rational{31}, Rational{161, 5}};
        return base + tail[n % 5];
    }
    throw std::invalid_argument("conjecture_bound: k must be 4 or 5");
}

}  // namespace mpw
