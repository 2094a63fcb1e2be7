// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Time limits are wall-clock seconds for the criterion's own work.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "fibsums/cli.hpp"

using namespace fibsums;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    std::string name;
    double time_limit_s;  // <= 0: no limit
    std::function<Outcome()> run;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome from_report(const IdentityReport& r, std::uint64_t expected_checks) {
    Outcome o;
    o.ok = r.passed() && r.checks == expected_checks;
    o.detail = std::to_string(r.checks) + " checks, " + std::to_string(r.violations.size()) + " violations";
    if (r.checks != expected_checks) o.detail += " (expected " + std::to_string(expected_checks) + " checks)";
    return o;
}

const std::vector<std::vector<std::uint64_t>> kTable1 = {
    {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144},
    {1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376},
    {1, 3, 7, 14, 26, 46, 79, 133, 221, 364, 596, 972},
    {1, 4, 11, 25, 51, 97, 176, 309, 530, 894, 1490, 2462},
    {1, 5, 16, 41, 92, 189, 365, 674, 1204, 2098, 3588, 6050},
    {1, 6, 22, 63, 155, 344, 709, 1383, 2587, 4685, 8273, 14323},
};

const std::vector<std::vector<std::uint64_t>> kTable2 = {
    {2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377},
    {1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376},
    {0, 0, 1, 3, 7, 14, 26, 46, 79, 133, 221, 364},
    {0, 0, 0, 0, 1, 4, 11, 25, 51, 97, 176, 309},
    {0, 0, 0, 0, 0, 0, 1, 5, 16, 41, 92, 189},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 6, 22, 63},
};

Outcome golden_table(Family family, const std::vector<std::vector<std::uint64_t>>& expected,
                     const std::string& golden_file) {
    Outcome o;
    const Grid g = family == Family::a ? a_grid(5, 12) : s_grid(5, 12);
    int mismatches = 0;
    for (Order k = 0; k <= 5; ++k) {
        for (Index n = 1; n <= 12; ++n) {
            if (g.at(k, n) != Natural{expected[k][n - 1]}) ++mismatches;
        }
    }
    std::ostringstream out, err;
    const int rc = cli::cmd_table({family, 5, 12, Format::tsv}, out, err);
    const bool bytes_ok = rc == 0 && out.str() == read_file(std::string(FIBSUMS_GOLDEN_DIR) + "/" + golden_file);
    o.ok = mismatches == 0 && bytes_ok;
    o.detail = std::to_string(72 - mismatches) + "/72 values, tsv " + (bytes_ok ? "byte-identical" : "DIFFERS");
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"Golden Table 1 (a_k(n), k<=5, n<=12)", 1.0,
         [] {
             auto o = golden_table(Family::a, kTable1, "table1.tsv");
             o.ok = o.ok && a(3, 12) == Natural{2462} && a(5, 12) == Natural{14323};
             return o;
         }},
        {"Golden Table 2 (s_k(n), k<=5, n<=12)", 1.0,
         [] {
             auto o = golden_table(Family::s, kTable2, "table2.tsv");
             o.ok = o.ok && s_formula(12, 4) == Natural{189} && s_formula(3, 2) == Natural{1};
             return o;
         }},
        {"Theorem 1 sweep k in [1,30], n in [1,200]", 10.0,
         [] {
             PrefixTable cache;
             auto o = from_report(verify_theorem1({1, 30}, {1, 200}, cache), 30 * 200);
             const bool wide = cache.at(29, 202).bit_length() > 64;
             o.ok = o.ok && wide;
             o.detail += wide ? ", values exceed 64 bits" : ", values unexpectedly fit 64 bits";
             return o;
         }},
        {"k=1 specialization sum F_m = F_{n+2} - 1, n <= 10000", 0.0,
         [] {
             PrefixTable cache;
             auto o = from_report(verify_theorem1({1, 1}, {1, 10'000}, cache), 10'000);
             // Same statement through fib() and an independent running sum.
             Natural running;
             std::uint64_t direct_bad = 0;
             for (Index n = 1; n <= 10'000; ++n) {
                 running += fib(n);
                 if (running + Natural{1} != fib(n + 2)) ++direct_bad;
             }
             o.ok = o.ok && direct_bad == 0;
             o.detail += ", direct route " + std::to_string(direct_bad) + " violations";
             return o;
         }},
        {"Lemma sweep a_k(3) = C(k+2,k) + 1, k in [0,10000]", 10.0,
         [] {
             PrefixTable cache;
             return from_report(verify_lemma_a3({0, 10'000}, cache), 10'001);
         }},
        {"Theorem 2 sweep k in [0,12], n in [1,60]", 0.0,
         [] {
             PrefixTable cache;
             const auto r = verify_theorem2({0, 12}, {1, 60}, kDefaultEnumerationGuard, cache);
             // 13 x 60 formula checks plus 13 x 25 enumeration cross-checks.
             auto o = from_report(r, 13 * 60 + 13 * 25);
             std::uint64_t zero_cells = 0;
             for (Order k = 0; k <= 12; ++k) {
                 for (Index n = 1; n <= 60; ++n) zero_cells += n - 2 * (k - 1) <= 0 ? 1 : 0;
             }
             o.detail += ", " + std::to_string(zero_cells) + " zero-convention cells";
             return o;
         }},
        {"Corollary cs sweep l in [0,10], n in [1,60]", 0.0,
         [] { return from_report(verify_corollary_cs({0, 10}, {1, 60}), 11 * 60); }},
        {"Oracle equivalence s_enumerate = s_formula, n in [1,20], k in [0,10]", 60.0,
         [] {
             // One s_enumerate call per (n, k), as stated.
             Outcome o;
             std::uint64_t checks = 0, bad = 0;
             for (Index n = 1; n <= 20; ++n) {
                 for (Order k = 0; k <= 10; ++k) {
                     ++checks;
                     if (s_enumerate(n, k) != s_formula(n, k)) ++bad;
                 }
             }
             o.ok = bad == 0 && checks == 220;
             o.detail = std::to_string(checks) + " checks, " + std::to_string(bad) + " mismatches";
             return o;
         }},
        {"Closed form a_closed = a, k in [0,20], n in [1,100]", 0.0,
         [] {
             PrefixTable cache;
             return from_report(verify_closed_form({0, 20}, {1, 100}, cache), 21 * 100);
         }},
        {"Staircase s(2k-1,k) = 1 and s(2k-2,k) = 0, k in [1,15]", 0.0,
         [] {
             Outcome o;
             int bad = 0;
             for (Order k = 1; k <= 15; ++k) {
                 if (s_formula(2 * k - 1, k) != Natural{1}) ++bad;
                 // At k = 1 the cell is n = 0, outside the query domain (n >= 1);
                 // the empty ground set has no nonempty subset, and the shifted
                 // a-side gives a_1(0) = 0.
                 const bool zero = k >= 2 ? s_formula(2 * k - 2, k).is_zero() : a(1, 0).is_zero();
                 if (!zero) ++bad;
             }
             o.ok = bad == 0;
             o.detail = std::to_string(bad) + " violations";
             return o;
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool within = c.time_limit_s <= 0 || secs < c.time_limit_s;
        const bool ok = o.ok && within;
        if (!ok) ++failed;
        std::printf("[%s] %s: %s (%.3f s", ok ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(), secs);
        if (c.time_limit_s > 0) std::printf(", limit %.0f s%s", c.time_limit_s, within ? "" : " EXCEEDED");
        std::printf(")\n");
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
