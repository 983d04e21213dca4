// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Criterion 8 documents a known red: the per-shape cardinality formula is not
// an upper bound for mixed-part shapes (see the (4,3) row it prints).
//
// Usage: acceptance [--cli PATH] [--only N]

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ddf/bounds.hpp"
#include "ddf/distinguish.hpp"
#include "ddf/family.hpp"
#include "ddf/io.hpp"

using namespace ddf;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

struct Criterion {
    int number;
    std::string name;
    std::function<bool(std::ostream&)> run;
};

const auto kDefault = DoublingPredicate::max_degree_at_least(4);
const auto kSolveBudget = std::chrono::milliseconds(300000);  // 5 min per instance

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool criterion_enumeration_counts(std::ostream& log) {
    auto t0 = Clock::now();
    std::map<int, std::size_t> expected{{4, 3}, {5, 12}, {6, 60}, {7, 360}, {8, 2520}};
    bool ok = true;
    for (auto [n, want] : expected) {
        auto got = Universe::hamilton_cycles(n).collect().size();
        if (got != want) {
            log << " n=" << n << " got " << got << " want " << want;
            ok = false;
        }
    }
    double secs = seconds_since(t0);
    log << " counts 3,12,60,360,2520 in " << secs << "s";
    return ok && secs < 10.0;
}

bool criterion_matching_count_oracle(std::ostream& log) {
    auto t0 = Clock::now();
    std::map<int, Int> expected{{4, 2}, {6, 8}, {8, 48}};
    bool ok = true;
    for (auto& [n, want] : expected) {
        Int formula = fixed_matching_cycle_count(n);
        long oracle = 0;
        auto pattern = canonical_perfect_matching(n);
        hamilton_cycles(n, [&](const LabeledGraph& c) {
            if (c.contains(pattern)) ++oracle;
            return true;
        });
        log << " n=" << n << ": formula " << formula << " oracle " << oracle;
        ok = ok && formula == want && formula == oracle;
    }
    double secs = seconds_since(t0);
    return ok && secs < 30.0;
}

bool criterion_near_matching_count_oracle(std::ostream& log) {
    std::map<int, Int> expected{{5, 2}, {7, 8}};
    bool ok = true;
    for (auto& [n, want] : expected) {
        Int formula = fixed_near_matching_cycle_count(n);
        long oracle = 0;
        auto pattern = canonical_near_matching(n);
        hamilton_cycles(n, [&](const LabeledGraph& c) {
            if (c.contains(pattern)) ++oracle;
            return true;
        });
        log << " n=" << n << ": formula " << formula << " oracle " << oracle;
        ok = ok && formula == want && formula == oracle;
    }
    return ok;
}

bool criterion_uniform_covering(std::ostream& log) {
    bool ok = true;
    for (int n : {4, 6}) {
        auto cycles = Universe::hamilton_cycles(n).collect();
        auto matchings = Universe::perfect_matchings(n).collect();
        auto counts = containment_counts_parallel(matchings, cycles);
        for (long c : counts.per_member) ok = ok && c == 2;
        log << " n=" << n << ": matchings/cycle = 2";
    }
    for (int n : {5, 7}) {
        auto cycles = Universe::hamilton_cycles(n).collect();
        auto nears = Universe::near_matchings(n).collect();
        auto counts = containment_counts_parallel(nears, cycles);
        long first = counts.per_member.front();
        for (long c : counts.per_member) ok = ok && c == first;
        log << " n=" << n << ": near-matchings/cycle = " << first;
    }
    return ok;
}

bool criterion_exact_cycle_maxima(std::ostream& log) {
    bool ok = true;
    for (int n = 4; n <= 7; ++n) {
        auto cycles = Universe::hamilton_cycles(n).collect();
        auto report = max_family_exact(cycles, kDefault, kSolveBudget, "hamilton-cycles");
        auto hb = hamilton_family_bounds(n);
        bool exact = report.status == SolveReport::Status::Exact;
        bool upper_ok = report.value <= hb.upper && report.value <= hb.upper_weak;
        bool lower_vacuous = hb.lower.hi() < 1;
        log << " Q(" << n << ")=" << report.value << (exact ? "" : "?")
            << " upper " << hb.upper << " weak " << hb.upper_weak
            << " lower<1=" << (lower_vacuous ? "y" : "n");
        ok = ok && exact && upper_ok && report.value >= 1 && lower_vacuous;
        if (n == 4) ok = ok && report.value == 1;
    }
    // n = 8 best effort with explicit status
    long q8_ms = 10000;
    if (const char* env = std::getenv("DDF_ACCEPT_Q8_BUDGET_MS")) q8_ms = std::atol(env);
    auto cycles8 = Universe::hamilton_cycles(8).collect();
    auto r8 = max_family_exact(cycles8, kDefault, std::chrono::milliseconds(q8_ms),
                               "hamilton-cycles");
    log << " Q(8)>=" << r8.value << " status=" << r8.status_name();
    ok = ok && r8.value >= 1 && verify_family(r8.witness).ok &&
         r8.value <= hamilton_family_bounds(8).upper;
    return ok;
}

bool criterion_greedy(std::ostream& log) {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        auto cycles = Universe::hamilton_cycles(n).collect();
        auto fam = greedy_family(cycles, kDefault, "hamilton-cycles");
        bool valid = verify_family(fam).ok;
        bool maximal = is_inclusion_maximal(fam, cycles);
        ok = ok && valid && maximal;
        log << " greedy(" << n << ")=" << fam.size();
        if (n <= 7) {
            auto exact = max_family_exact(cycles, kDefault, kSolveBudget, "hamilton-cycles");
            ok = ok && exact.status == SolveReport::Status::Exact &&
                 Int(fam.size()) <= exact.value;
        }
    }
    return ok;
}

bool criterion_incompatibility_bound(std::ostream& log) {
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        auto cycles = Universe::hamilton_cycles(n).collect();
        long count = incompatible_count(canonical_hamilton_cycle(n), cycles);
        Int literal = incompatibility_sum(n);
        auto chained = incompatibility_growth_bound(n);
        bool in_bound = Rat(count) <= chained.hi();
        log << " n=" << n << ": count " << count << " literal-sum " << literal
            << " chained<=" << (in_bound ? "y" : "n");
        ok = ok && in_bound;
    }
    // the coverings report must expose the hexagon discrepancy: oracle 3 and 2
    // against the formula's 1 and 1
    auto coverings = collect_minimal_coverings(canonical_hamilton_cycle(6));
    std::map<int, long> by_s;
    for (const auto& c : coverings) ++by_s[c.component_count];
    bool hexagon = by_s[2] == 3 && by_s[3] == 2 && binomial(2, 2) == 1 && binomial(3, 0) == 1;
    log << " | hexagon coverings oracle s=2:" << by_s[2] << " s=3:" << by_s[3]
        << " vs formula 1,1 (discrepancy flagged)";
    return ok && hexagon;
}

bool criterion_triangle_families(std::ostream& log) {
    bool ok = true;
    for (int n = 3; n <= 9; ++n) {
        auto fam = triangle_family(n);
        bool valid = verify_family(fam).ok;
        ok = ok && valid;
        log << " verify(" << n << ")=" << (valid ? "y" : "N");
    }
    std::map<int, Int> sizes{{3, 1}, {6, 10}, {9, 280}};
    for (auto& [n, want] : sizes) {
        Int got = Int(triangle_family(n).size());
        Int formula = exact_div(factorial(n), factorial(n / 3) * pow_int(6, n / 3));
        ok = ok && got == want && formula == want;
    }

    auto all6 = Universe::two_regular(6).collect();
    auto r6 = max_family_exact(all6, kDefault, kSolveBudget, "two-regular");
    log << " | R(6)=" << r6.value << " (" << r6.status_name() << ")";
    ok = ok && r6.status == SolveReport::Status::Exact && r6.value >= 10;

    // per-shape checks for n <= 7; the f_upper comparison fails for the
    // mixed-part shape (4,3) because the formula undercounts F(p) there
    for (int n = 3; n <= 7; ++n) {
        partitions(n, 3, [&](const PartitionShape& shape) {
            auto universe = Universe::two_regular(n, shape).collect();
            auto sb = shape_bounds(shape);
            long f_true = static_cast<long>(universe.size());
            auto pattern = pattern_for_shape(shape);
            long c_true = 0;
            for (const auto& g : universe)
                if (g.contains(pattern)) ++c_true;
            auto solve = max_family_exact(universe, kDefault, kSolveBudget, "shape");
            bool f_ok = Rat(f_true) <= sb.f_upper;
            bool c_ok = Rat(c_true) >= sb.c_lower;
            bool ratio_ok = c_true > 0 && Rat(solve.value) <= Rat(Int(f_true), c_true);
            bool m_ok = Rat(solve.value) <= sb.m_upper;
            if (!(f_ok && c_ok && ratio_ok && m_ok))
                log << " | shape " << shape.to_string() << ": |F|=" << f_true
                    << " f_upper=" << rat_str(sb.f_upper) << (f_ok ? "" : " F-CHECK-FAILS")
                    << (c_ok ? "" : " C-CHECK-FAILS") << (ratio_ok ? "" : " RATIO-FAILS")
                    << (m_ok ? "" : " M-FAILS");
            ok = ok && f_ok && c_ok && ratio_ok && m_ok &&
                 solve.status == SolveReport::Status::Exact;
            return true;
        });
    }
    return ok;
}

bool criterion_sandwich(std::ostream& log) {
    bool ok = true;
    for (int n : {4, 5}) {
        auto rep = cycle_path_sandwich(n, kSolveBudget);
        bool exact = rep.cycles.status == SolveReport::Status::Exact &&
                     rep.paths.status == SolveReport::Status::Exact;
        // ceil(2M/(n-1)) <= M^H asserted; M vs M^H reported
        Int num = 2 * rep.cycles.value, den = n - 1;
        Int ceil_ratio = (num + den - 1) / den;
        bool reach = rep.paths.value >= ceil_ratio;
        log << " n=" << n << ": M=" << rep.cycles.value << " M^H=" << rep.paths.value
            << " ceil(2M/(n-1))=" << ceil_ratio << " M>=M^H:" << (rep.cycles_ge_paths ? "y" : "n")
            << " (reported)";
        ok = ok && exact && reach;
    }
    return ok;
}

bool criterion_nu_cross_check(std::ostream& log) {
    bool ok = true;
    for (int n : {4, 5}) {
        auto nu_rep = nu(canonical_hamilton_cycle(n), kSolveBudget);
        auto q = max_family_exact(Universe::hamilton_cycles(n).collect(), kDefault, kSolveBudget,
                                  "hamilton-cycles");
        log << " nu(C" << n << ")=" << nu_rep.value << " Q(" << n << ")=" << q.value;
        ok = ok && nu_rep.value == q.value;
    }
    for (int n = 3; n <= 6; ++n) {
        auto all = Universe::two_regular(n).collect();
        for (std::size_t i = 0; i < all.size() && ok; ++i)
            for (std::size_t j = i + 1; j < all.size() && ok; ++j)
                ok = shannon_distinguishable(all[i], all[j]) ==
                     doubling_compatible(all[i], all[j], kDefault);
    }
    log << " | distinguishable<=>compatible exhaustive n<=6";
    return ok;
}

bool criterion_partitions(std::ostream& log) {
    bool ok = partition_count(5) == 7 && partition_count(10) == 42;
    for (int n = 1; n <= 20; ++n)
        ok = ok && partition_count(n) == partition_enumeration_count(n, 1);
    log << " p(n) recurrence = enumeration for n<=20; growth-bound table:";
    for (int n : {1, 2, 3, 4, 5, 10}) {
        auto hr = partition_count_growth_bound(n);
        bool holds = compare(hr, Rat(partition_count(n))) == Order::Greater;
        log << " n=" << n << (holds ? " holds" : " FAILS(reported)");
        if (n == 3) ok = ok && !holds;  // the flagged case
    }
    return ok;
}

bool criterion_average_degree_variant(std::ostream& log) {
    auto avg4 = DoublingPredicate::average_degree_at_least(4);
    auto cycles = Universe::hamilton_cycles(5).collect();
    auto report = max_family_exact(cycles, avg4, kSolveBudget, "hamilton-cycles");
    // brute-force oracle: scan all subsets of the 12 cycles
    int brute = 0;
    int n = static_cast<int>(cycles.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size <= brute) continue;
        bool good = true;
        for (int i = 0; i < n && good; ++i)
            if ((mask >> i) & 1u)
                for (int j = i + 1; j < n && good; ++j)
                    if ((mask >> j) & 1u) good = doubling_compatible(cycles[i], cycles[j], avg4);
        if (good) brute = size;
    }
    log << " exact=" << report.value << " brute=" << brute;
    return report.value == 2 && brute == 2 && report.status == SolveReport::Status::Exact;
}

bool run_cli(const std::string& args, const std::string& out_path) {
    std::string cmd = g_cli_path + " " + args + " > " + out_path + " 2>/dev/null";
    return std::system(cmd.c_str()) / 256 != 4;  // usage errors invalidate the check
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool criterion_determinism(std::ostream& log) {
    if (g_cli_path.empty()) {
        log << " no --cli path given";
        return false;
    }
    std::vector<std::string> runs{
        "enumerate --universe two-regular --n 6",
        "greedy --universe hamilton-cycles --n 6",
        "exact --universe hamilton-cycles --n 5",
        "bounds --n-min 4 --n-max 8",
        "verify --check coverings --n 6",
        "verify --check uniformity --n 5",
    };
    bool ok = true;
    int idx = 0;
    for (const auto& run : runs) {
        std::string a = "/tmp/ddf_accept_a" + std::to_string(idx);
        std::string b = "/tmp/ddf_accept_b" + std::to_string(idx);
        bool ran = run_cli("--threads 1 " + run, a) && run_cli("--threads 4 " + run, b);
        std::string da = slurp(a), db = slurp(b);
        bool same = ran && !da.empty() && da == db;
        if (!same) log << " MISMATCH[" << run << "]";
        ok = ok && same;
        ++idx;
    }
    log << " " << runs.size() << " subcommands byte-identical across --threads 1/4";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) g_cli_path = argv[++i];
        if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
    }

    std::vector<Criterion> criteria{
        {1, "enumeration counts", criterion_enumeration_counts},
        {2, "matching-extension count = oracle", criterion_matching_count_oracle},
        {3, "near-matching count = oracle", criterion_near_matching_count_oracle},
        {4, "uniform covering premise", criterion_uniform_covering},
        {5, "exact cycle-family maxima", criterion_exact_cycle_maxima},
        {6, "greedy validity and maximality", criterion_greedy},
        {7, "incompatibility bound", criterion_incompatibility_bound},
        {8, "triangle families and per-shape checks", criterion_triangle_families},
        {9, "cycle/path sandwich", criterion_sandwich},
        {10, "nu cross-check", criterion_nu_cross_check},
        {11, "partition machinery", criterion_partitions},
        {12, "average-degree variant", criterion_average_degree_variant},
        {13, "determinism across threads", criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        if (only && c.number != only) continue;
        std::ostringstream detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
        }
        if (!pass) ++failures;
        std::cout << "[" << (c.number < 10 ? " " : "") << c.number << "/13] " << c.name << " ... "
                  << (pass ? "PASS" : "FAIL") << " |" << detail.str() << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
