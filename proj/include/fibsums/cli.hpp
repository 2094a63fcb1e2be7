#pragma once

// Command bodies behind tools/fibsums. Each writes results to `out`,
// diagnostics to `err`, and returns the process exit status:
//   0  success / all checks passed
//   1  at least one identity violation
//   2  bad arguments or a resource guard rejected the request

#include <algorithm>
#include <array>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "identities.hpp"
#include "render.hpp"
#include "schreier.hpp"
#include "seq_core.hpp"

namespace fibsums::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

inline constexpr std::size_t kMaxListedViolations = 10;

inline constexpr std::array<std::string_view, 6> kIdentities = {
    "theorem1", "theorem2", "lemma_a3", "corollary_cs", "closed_form", "oracle",
};

inline void print_report(std::ostream& out, const IdentityReport& r) {
    const std::uint64_t ok = r.checks - r.violations.size();
    if (r.passed()) {
        out << "PASS " << ok << '/' << r.checks << " checks\n";
    } else {
        out << "FAIL " << ok << '/' << r.checks << " checks, " << r.violations.size() << " violations\n";
    }
    out << "identity " << r.identity_name << ", k in [" << r.k_range.lo << ", " << r.k_range.hi << "], n in ["
        << r.n_range.lo << ", " << r.n_range.hi << "]\n";
    const std::size_t shown = std::min(r.violations.size(), kMaxListedViolations);
    for (std::size_t i = 0; i < shown; ++i) {
        const Violation& v = r.violations[i];
        out << "  k=" << v.k << " n=" << v.n << " lhs=" << v.lhs << " rhs=";
        if (v.rhs) {
            out << *v.rhs;
        } else {
            out << "underflow";
        }
        if (!v.note.empty()) out << " (" << v.note << ')';
        out << '\n';
    }
    if (r.violations.size() > shown) out << "  ... " << (r.violations.size() - shown) << " more\n";
}

inline int cmd_table(const RenderSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        spec.validate();
        const Grid g = spec.family == Family::a ? a_grid(spec.k_max, spec.n_max) : s_grid(spec.k_max, spec.n_max);
        render_grid(out, g, spec.format);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

inline IdentityReport run_verifier(std::string_view which, Order k_max, Index n_max) {
    if (which == "theorem1") return verify_theorem1({1, k_max}, {1, n_max});
    if (which == "theorem2") return verify_theorem2({0, k_max}, {1, n_max});
    if (which == "lemma_a3") return verify_lemma_a3({0, k_max});
    if (which == "corollary_cs") return verify_corollary_cs({0, k_max}, {1, n_max});
    if (which == "closed_form") return verify_closed_form({0, k_max}, {1, n_max});
    if (which == "oracle") return verify_oracle({0, k_max}, {1, n_max});
    throw std::invalid_argument("unknown identity '" + std::string(which) + "'");
}

inline int cmd_verify(std::string_view which, Order k_max, Index n_max, std::ostream& out, std::ostream& err) {
    try {
        if (k_max < 0) throw std::invalid_argument("kmax must be >= 0");
        if (n_max < 1) throw std::invalid_argument("nmax must be >= 1");
        const IdentityReport report = run_verifier(which, k_max, n_max);
        print_report(out, report);
        return report.passed() ? kExitOk : kExitViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

inline int cmd_bfile(Family family, Order k, Index n_max, std::ostream& out, std::ostream& err) {
    try {
        if (k < 0) throw std::invalid_argument("k must be >= 0");
        if (n_max < 1) throw std::invalid_argument("nmax must be >= 1");
        std::vector<Natural> values;
        if (family == Family::a) {
            values = table(k, n_max).row(k, n_max);
        } else {
            check_cell_budget(1, static_cast<std::uint64_t>(n_max));
            values.reserve(static_cast<std::size_t>(n_max));
            for (Index n = 1; n <= n_max; ++n) values.push_back(s_formula(n, k));
        }
        render_bfile(out, values);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace fibsums::cli
