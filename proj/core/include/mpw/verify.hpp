#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mpw/enumerate.hpp"
#include "mpw/extremal.hpp"

namespace mpw {

struct ReportStats {
    long long max = 0;
    std::vector<std::string> argmax_codes;  // hex-encoded canonical codes
    long long count = 0;
};

/// Machine-readable outcome of one executable claim. A failing report
/// always carries at least one witness; a passing one carries none.
struct VerificationReport {
    std::string claim;
    std::string range;
    bool pass = true;
    std::vector<std::string> witnesses;
    ReportStats stats;

    void fail(std::string witness);
};

/// Serialized as one JSON object per line with fixed key order:
/// {claim, range, status, witnesses[], stats{max, argmax_codes[], count}}.
void write_reports(std::ostream& out, std::span<const VerificationReport> reports);

/// 0 when every report passes, 1 otherwise.
int exit_status(std::span<const VerificationReport> reports);

/// Checkers taking a TriangulationSet scan the classes in parallel
/// (read-only sharing, jobs = 0 meaning all cores) and reduce into the
/// report single-threaded in code order, so results never depend on the
/// worker count.

/// Max Wiener index over all triangulation classes equals the closed-form
/// bound (asserted for n >= 6); for n >= 10 the maximizer must be unique
/// and canonical-code-equal to T_n.
VerificationReport verify_extremal(const TriangulationSet& ts, int jobs = 0);
VerificationReport verify_extremal(int n, EnumerateOptions opt = {});

/// Min Wiener index over all classes equals (n-2)^2 + 2.
VerificationReport verify_min(const TriangulationSet& ts, int jobs = 0);
VerificationReport verify_min(int n, EnumerateOptions opt = {});

/// In every class of connectivity s, every cut set of size s induces a
/// spanning cycle on itself. Larger cut sets are deliberately not checked.
VerificationReport verify_cut_cycle_lemma(const TriangulationSet& ts, int jobs = 0);
VerificationReport verify_cut_cycle_lemma(int n, EnumerateOptions opt = {});

/// Status bounds under the convention sigma(S) <= sigma_s(|V| - |S|):
/// for every vertex v and every s up to the connectivity, and for every
/// facial triple S with s = 3.
VerificationReport verify_status_bounds(const TriangulationSet& ts, int jobs = 0);
VerificationReport verify_status_bounds(int n, EnumerateOptions opt = {});

/// 720 x the 4-connected-case master inequality
/// 1312 - 648n + 45n^2 + 144x + 246nx - 30n^2 x - 54x^2 + 12nx^2 + 18x^3;
/// nonpositive on 4 <= x <= (n-4)/2 for n >= 19.
long long case21_poly(long long n, long long x);

/// 120 x its x-derivative: 24 + 41n - 5n^2 - 18x + 4nx + 9x^2.
long long case21_derivative(long long n, long long x);

/// The 3-connected-case cubic -x^3 + (n+3)x^2 + (21-6n)x - 15 - 3n;
/// nonnegative on 7 <= x <= n/2 for n >= 19.
long long case35_poly(long long n, long long x);

/// Its x-derivative -3x^2 + (2n+6)x + 21 - 6n.
long long case35_derivative(long long n, long long x);

/// Exact integer checks of every per-case inequality on integer grids up
/// to n_max (n_max >= 19), after clearing denominators (x720 or x18).
std::vector<VerificationReport> verify_inequalities(long long n_max);

/// Max Wiener index among 4-connected classes against conjecture_bound(4,n),
/// and among 5-connected classes (n >= 12) against conjecture_bound(5,n).
/// The second bound family is applied to the 5-connected class.
std::vector<VerificationReport> probe_conjectures(const TriangulationSet& ts, int jobs = 0);
std::vector<VerificationReport> probe_conjectures(int n, EnumerateOptions opt = {});

}  // namespace mpw
