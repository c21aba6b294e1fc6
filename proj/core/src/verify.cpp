#include "mpw/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "mpw/graph.hpp"

namespace mpw {

namespace {

constexpr size_t kMaxWitnesses = 32;

using i128 = __int128;

long long narrow(i128 v, const char* what) {
    if (v > static_cast<i128>(std::numeric_limits<long long>::max()) ||
        v < static_cast<i128>(std::numeric_limits<long long>::min()))
        throw std::overflow_error(what);
    return static_cast<long long>(v);
}

constexpr long long kPolyArgLimit = 20'000'000;

void check_poly_args(long long n, long long x, const char* what) {
    if (n > kPolyArgLimit || n < -kPolyArgLimit || x > kPolyArgLimit || x < -kPolyArgLimit)
        throw std::overflow_error(what);
}

std::string pair_witness(long long n, long long x) {
    std::ostringstream os;
    os << "(n=" << n << ",x=" << x << ")";
    return os.str();
}

std::string n_witness(long long n) {
    std::ostringstream os;
    os << "(n=" << n << ")";
    return os.str();
}

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i;
    if (k > n) return;
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    if (r.denominator() == 1)
        os << r.numerator();
    else
        os << r.numerator() << '/' << r.denominator();
    return os.str();
}

// 18 * floor((n^3+3n^2)/18), via the exact residue cases.
long long floor18(long long n) {
    static constexpr long long kDrop[3] = {0, 4, 2};
    return narrow(i128(n) * n * (n + 3) - kDrop[n % 3], "floor18 overflow");
}

// Run fn over every class, partitioned across workers. fn writes only to
// its own index slot, so the subsequent single-owner reduction sees the
// same data regardless of worker count.
template <typename F>
void scan_classes(const TriangulationSet& ts, int jobs, F&& fn) {
    std::vector<const std::pair<const std::string, Embedding>*> items;
    items.reserve(ts.classes.size());
    for (const auto& kv : ts.classes) items.push_back(&kv);
    const size_t total = items.size();
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(total ? total : 1)));
    if (jobs == 1 || total < 32) {
        for (size_t i = 0; i < total; ++i) fn(i, items[i]->first, items[i]->second);
        return;
    }
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1))
            fn(i, items[i]->first, items[i]->second);
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
}

}  // namespace

void VerificationReport::fail(std::string witness) {
    pass = false;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void write_reports(std::ostream& out, std::span<const VerificationReport> reports) {
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["claim"] = r.claim;
        j["range"] = r.range;
        j["status"] = r.pass ? "pass" : "fail";
        j["witnesses"] = r.witnesses;
        j["stats"] = nlohmann::ordered_json{
            {"max", r.stats.max}, {"argmax_codes", r.stats.argmax_codes}, {"count", r.stats.count}};
        out << j.dump() << '\n';
    }
}

int exit_status(std::span<const VerificationReport> reports) {
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

VerificationReport verify_extremal(const TriangulationSet& ts, int jobs) {
    const int n = ts.n;
    VerificationReport r;
    r.claim = "max_wiener_equals_closed_form_bound";
    r.range = "n=" + std::to_string(n);
    r.stats.count = ts.count();

    std::vector<long long> w(ts.classes.size());
    scan_classes(ts, jobs,
                 [&](size_t i, const std::string&, const Embedding& emb) { w[i] = wiener_index(emb); });

    long long best = -1;
    std::vector<std::string> argmax_hex;
    std::vector<std::string> argmax_raw;
    size_t i = 0;
    for (const auto& [code, emb] : ts.classes) {
        if (w[i] > best) {
            best = w[i];
            argmax_hex.clear();
            argmax_raw.clear();
        }
        if (w[i] == best) {
            argmax_hex.push_back(CanonicalCode{code}.hex());
            argmax_raw.push_back(code);
        }
        ++i;
    }
    r.stats.max = best;
    r.stats.argmax_codes = argmax_hex;

    if (n >= 6 && best != wiener_upper_bound(n))
        r.fail("max=" + std::to_string(best) + " expected=" + std::to_string(wiener_upper_bound(n)));
    if (n >= 10) {
        const std::string tn = canonical_code(construct_tn(n)).bytes;
        if (argmax_raw.size() != 1)
            r.fail("maximizer not unique: " + std::to_string(argmax_raw.size()) + " classes");
        else if (argmax_raw.front() != tn)
            r.fail("maximizer differs from T_n: " + argmax_hex.front());
    }
    return r;
}

VerificationReport verify_min(const TriangulationSet& ts, int jobs) {
    const int n = ts.n;
    VerificationReport r;
    r.claim = "min_wiener_equals_diameter2_bound";
    r.range = "n=" + std::to_string(n);
    r.stats.count = ts.count();

    std::vector<long long> w(ts.classes.size());
    scan_classes(ts, jobs,
                 [&](size_t i, const std::string&, const Embedding& emb) { w[i] = wiener_index(emb); });

    long long best = std::numeric_limits<long long>::max();
    std::vector<std::string> argmin_hex;
    size_t i = 0;
    for (const auto& [code, emb] : ts.classes) {
        if (w[i] < best) {
            best = w[i];
            argmin_hex.clear();
        }
        if (w[i] == best) argmin_hex.push_back(CanonicalCode{code}.hex());
        ++i;
    }
    r.stats.max = best;
    r.stats.argmax_codes = argmin_hex;

    const long long expected = static_cast<long long>(n - 2) * (n - 2) + 2;
    if (best != expected)
        r.fail("min=" + std::to_string(best) + " expected=" + std::to_string(expected));
    return r;
}

VerificationReport verify_cut_cycle_lemma(const TriangulationSet& ts, int jobs) {
    const int n = ts.n;
    if (n < 5) throw std::invalid_argument("verify_cut_cycle_lemma: need n >= 5");
    VerificationReport r;
    r.claim = "size_s_cut_sets_induce_spanning_cycles_in_s_connected";
    r.range = "n=" + std::to_string(n);
    r.stats.count = ts.count();

    std::vector<long long> checked(ts.classes.size(), 0);
    std::vector<std::vector<std::string>> bad(ts.classes.size());
    scan_classes(ts, jobs, [&](size_t i, const std::string& code, const Embedding& emb) {
        const Graph g = emb.to_graph();
        const int s = vertex_connectivity(g);
        for_each_subset(n, s, [&](std::span<const int> subset) {
            if (!is_cut_set(g, subset)) return;
            ++checked[i];
            if (!induces_spanning_cycle(g, subset)) {
                std::ostringstream os;
                os << CanonicalCode{code}.hex() << " S={";
                for (size_t j = 0; j < subset.size(); ++j) os << (j ? "," : "") << subset[j];
                os << "}";
                bad[i].push_back(os.str());
            }
        });
    });
    for (size_t i = 0; i < bad.size(); ++i) {
        r.stats.max += checked[i];
        for (auto& witness : bad[i]) r.fail(std::move(witness));
    }
    return r;
}

VerificationReport verify_status_bounds(const TriangulationSet& ts, int jobs) {
    const int n = ts.n;
    VerificationReport r;
    r.claim = "status_bounds_sigma_of_S_at_most_sigma_s_of_V_minus_S";
    r.range = "n=" + std::to_string(n) +
              "; convention: sigma counts all vertices, bound argument is |V|-|S|";
    r.stats.count = ts.count();

    std::vector<long long> worst(ts.classes.size(), 0);
    std::vector<std::vector<std::string>> bad(ts.classes.size());
    scan_classes(ts, jobs, [&](size_t i, const std::string& code, const Embedding& emb) {
        const Graph g = emb.to_graph();
        const int kappa = vertex_connectivity(g);
        for (int v = 0; v < n; ++v) {
            const int root[1] = {v};
            const long long sigma = status(g, root);
            worst[i] = std::max(worst[i], sigma);
            for (int s = 3; s <= std::min(kappa, 5); ++s) {
                if (sigma > sigma_bound(s, n - 1)) {
                    std::ostringstream os;
                    os << CanonicalCode{code}.hex() << " v=" << v << " s=" << s
                       << " sigma=" << sigma << " bound=" << sigma_bound(s, n - 1);
                    bad[i].push_back(os.str());
                }
            }
        }
        for (const auto& f : faces(emb)) {
            const long long sigma = status(g, f);
            if (sigma > sigma_bound(3, n - 3)) {
                std::ostringstream os;
                os << CanonicalCode{code}.hex() << " face={" << f[0] << ',' << f[1] << ',' << f[2]
                   << "} sigma=" << sigma << " bound=" << sigma_bound(3, n - 3);
                bad[i].push_back(os.str());
            }
        }
    });
    for (size_t i = 0; i < bad.size(); ++i) {
        r.stats.max = std::max(r.stats.max, worst[i]);
        for (auto& witness : bad[i]) r.fail(std::move(witness));
    }
    return r;
}

long long case21_poly(long long n, long long x) {
    check_poly_args(n, x, "case21_poly: argument out of guarded range");
    const i128 N = n, X = x;
    const i128 v = 1312 - 648 * N + 45 * N * N + 144 * X + 246 * N * X - 30 * N * N * X -
                   54 * X * X + 12 * N * X * X + 18 * X * X * X;
    return narrow(v, "case21_poly: value exceeds 64 bits");
}

long long case21_derivative(long long n, long long x) {
    check_poly_args(n, x, "case21_derivative: argument out of guarded range");
    const i128 N = n, X = x;
    const i128 v = 24 + 41 * N - 5 * N * N - 18 * X + 4 * N * X + 9 * X * X;
    return narrow(v, "case21_derivative: value exceeds 64 bits");
}

long long case35_poly(long long n, long long x) {
    check_poly_args(n, x, "case35_poly: argument out of guarded range");
    const i128 N = n, X = x;
    const i128 v = -X * X * X + X * X * (N + 3) + X * (21 - 6 * N) - 15 - 3 * N;
    return narrow(v, "case35_poly: value exceeds 64 bits");
}

long long case35_derivative(long long n, long long x) {
    check_poly_args(n, x, "case35_derivative: argument out of guarded range");
    const i128 N = n, X = x;
    const i128 v = -3 * X * X + (2 * N + 6) * X + 21 - 6 * N;
    return narrow(v, "case35_derivative: value exceeds 64 bits");
}

std::vector<VerificationReport> verify_inequalities(long long n_max) {
    if (n_max < 19) throw std::invalid_argument("verify_inequalities: need n_max >= 19");
    if (n_max > 1'000'000) throw std::invalid_argument("verify_inequalities: n_max above guard");
    std::vector<VerificationReport> out;
    const std::string upto = std::to_string(n_max);

    {
        VerificationReport r;
        r.claim = "case_2_1_master_nonpositive";
        r.range = "19<=n<=" + upto + ", 4<=x<=floor((n-4)/2)";
        for (long long n = 19; n <= n_max; ++n) {
            for (long long x = 4; x <= (n - 4) / 2; ++x) {
                ++r.stats.count;
                const long long v = case21_poly(n, x);
                r.stats.max = std::max(r.stats.max, v);
                if (v > 0) r.fail(pair_witness(n, x));
            }
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_2_1_reduction_at_x_4";
        r.range = "identity on |n|<=10000; nonpositive for 10<=n<=" + upto;
        for (long long n = -10'000; n <= 10'000; ++n) {
            ++r.stats.count;
            if (case21_poly(n, 4) != 2176 + 528 * n - 75 * n * n) r.fail(n_witness(n));
        }
        for (long long n = 10; n <= n_max; ++n) {
            ++r.stats.count;
            if (case21_poly(n, 4) > 0) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_2_1_derivative_endpoints";
        r.range = "x=4 negative for 13<=n<=" + upto +
                  "; 128+8n-n^2 negative for 17<=n<=" + upto +
                  "; 4*D(n,(n-4)/2)=3*(128+8n-n^2) for even |n|<=10000";
        for (long long n = -10'000; n <= 10'000; ++n) {
            ++r.stats.count;
            if (case21_derivative(n, 4) != 96 + 57 * n - 5 * n * n) r.fail(n_witness(n));
            if (n % 2 == 0 &&
                4 * case21_derivative(n, (n - 4) / 2) != 3 * (128 + 8 * n - n * n))
                r.fail(n_witness(n));
        }
        for (long long n = 13; n <= n_max; ++n) {
            ++r.stats.count;
            if (case21_derivative(n, 4) >= 0) r.fail(pair_witness(n, 4));
        }
        for (long long n = 17; n <= n_max; ++n) {
            ++r.stats.count;
            if (128 + 8 * n - n * n >= 0) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_2_2_chain_below_bound";
        r.range = "10<=n<=" + upto + " (x720)";
        for (long long n = 10; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 N = n;
            const i128 lhs = 40 * ((N - 2) * (N - 2) * (N - 2) + 3 * (N - 2) * (N - 2)) +
                             45 * (N - 6) * (N - 6) + 144 * (N * N + 5 * N);
            const i128 rhs = 40 * (N * N * N + 3 * N * N) - 720;
            if (lhs > rhs) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_2_3_chain_below_bound";
        r.range = "9<=n<=" + upto + " (x720)";
        for (long long n = 9; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 N = n;
            const i128 lhs = 40 * ((N - 1) * (N - 1) * (N - 1) + 3 * (N - 1) * (N - 1)) +
                             45 * (N - 5) * (N - 5) + 72 * (N * N + 5 * N);
            const i128 rhs = 40 * (N * N * N + 3 * N * N) - 720;
            if (lhs > rhs) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_1_chain_equals_floor_bound";
        r.range = "4<=n<=" + upto + " (x18; indicator-corrected chain is exactly the bound)";
        for (long long n = 4; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 chain = i128(n) * n * n + 3 * i128(n) * n + 2 - (n % 3 == 0 ? 2 : 0) -
                               (n % 3 == 2 ? 4 : 0) - (n % 3 == 1 ? 6 : 0);
            const i128 bound = floor18(n);
            if (chain > bound) r.fail(n_witness(n));
            r.stats.max = std::max<long long>(r.stats.max, narrow(bound - chain, "case_3_1 margin"));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_2_strict_below_floor_bound";
        r.range = "19<=n<=" + upto + " (x18)";
        for (long long n = 19; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 N = n;
            const i128 lhs = (N - 3) * (N - 3) * (N - 3) + 3 * (N - 3) * (N - 3) +
                             9 * ((N - 6) * (N - 6) + 3 * (N - 6) + 2) + 18 * (4 * N - 11);
            if (lhs >= floor18(n)) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_3_strict_below_floor_bound";
        r.range = "19<=n<=" + upto + " (x18)";
        for (long long n = 19; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 N = n;
            const i128 lhs = (N - 4) * (N - 4) * (N - 4) + 3 * (N - 4) * (N - 4) + 126 +
                             12 * ((N - 7) * (N - 7) + (N - 7) + 2) + 108 * (N - 4);
            if (lhs >= floor18(n)) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_4_strict_below_floor_bound";
        r.range = "19<=n<=" + upto + " (x18)";
        for (long long n = 19; n <= n_max; ++n) {
            ++r.stats.count;
            const i128 N = n;
            const i128 lhs = (N - 5) * (N - 5) * (N - 5) + 3 * (N - 5) * (N - 5) + 234 +
                             15 * ((N - 8) * (N - 8) + (N - 8) + 2) + 144 * (N - 5);
            if (lhs >= floor18(n)) r.fail(n_witness(n));
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_5_cubic_nonnegative";
        r.range = "19<=n<=" + upto + ", 7<=x<=floor(n/2)";
        for (long long n = 19; n <= n_max; ++n) {
            for (long long x = 7; x <= n / 2; ++x) {
                ++r.stats.count;
                if (case35_poly(n, x) < 0) r.fail(pair_witness(n, x));
            }
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r;
        r.claim = "case_3_5_reduction_and_derivative";
        r.range = "poly(n,7)=4n-64 on |n|<=10000; derivative positive at x=7 and x=floor(n/2) for 19<=n<=" + upto;
        for (long long n = -10'000; n <= 10'000; ++n) {
            ++r.stats.count;
            if (case35_poly(n, 7) != 4 * n - 64) r.fail(n_witness(n));
        }
        for (long long n = 19; n <= n_max; ++n) {
            ++r.stats.count;
            if (case35_derivative(n, 7) <= 0) r.fail(pair_witness(n, 7));
            if (case35_derivative(n, n / 2) <= 0) r.fail(pair_witness(n, n / 2));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<VerificationReport> probe_conjectures(const TriangulationSet& ts, int jobs) {
    const int n = ts.n;
    if (n < 6) throw std::invalid_argument("probe_conjectures: need n >= 6");
    std::vector<int> kappa(ts.classes.size());
    std::vector<long long> w(ts.classes.size());
    scan_classes(ts, jobs, [&](size_t i, const std::string&, const Embedding& emb) {
        kappa[i] = vertex_connectivity(emb.to_graph());
        w[i] = kappa[i] >= 4 ? wiener_index(emb) : 0;
    });
    std::vector<std::pair<long long, std::string>> four, five;
    size_t i = 0;
    for (const auto& [code, emb] : ts.classes) {
        if (kappa[i] >= 4) {
            four.emplace_back(w[i], code);
            if (kappa[i] >= 5) five.emplace_back(w[i], code);
        }
        ++i;
    }

    auto build = [&](int k, const std::vector<std::pair<long long, std::string>>& members) {
        VerificationReport r;
        r.claim = "max_wiener_" + std::to_string(k) + "_connected_within_conjectured_bound";
        const Rational bound = conjecture_bound(k, n);
        r.stats.count = static_cast<long long>(members.size());
        long long best = -1;
        for (const auto& [w, code] : members) best = std::max(best, w);
        for (const auto& [w, code] : members)
            if (w == best) r.stats.argmax_codes.push_back(CanonicalCode{code}.hex());
        r.stats.max = std::max(best, -1LL);
        const bool attained = !members.empty() && Rational(best) == bound;
        r.range = "n=" + std::to_string(n) + "; bound=" + rational_str(bound) +
                  (members.empty() ? "; class empty"
                                   : (attained ? "; equality attained" : "; equality not attained"));
        if (k == 5) r.range += "; second conjectured bound family applied to the 5-connected class";
        if (!members.empty() && Rational(best) > bound)
            r.fail("max=" + std::to_string(best) + " bound=" + rational_str(bound));
        return r;
    };

    std::vector<VerificationReport> out;
    out.push_back(build(4, four));
    if (n >= 12) out.push_back(build(5, five));
    return out;
}

VerificationReport verify_extremal(int n, EnumerateOptions opt) {
    return verify_extremal(enumerate_triangulations(n, opt), opt.jobs);
}
VerificationReport verify_min(int n, EnumerateOptions opt) {
    return verify_min(enumerate_triangulations(n, opt), opt.jobs);
}
VerificationReport verify_cut_cycle_lemma(int n, EnumerateOptions opt) {
    return verify_cut_cycle_lemma(enumerate_triangulations(n, opt), opt.jobs);
}
VerificationReport verify_status_bounds(int n, EnumerateOptions opt) {
    return verify_status_bounds(enumerate_triangulations(n, opt), opt.jobs);
}
std::vector<VerificationReport> probe_conjectures(int n, EnumerateOptions opt) {
    return probe_conjectures(enumerate_triangulations(n, opt), opt.jobs);
}

}  // namespace mpw
