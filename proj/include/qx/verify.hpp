#ifndef QX_VERIFY_HPP
#define QX_VERIFY_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qx/search.hpp"

namespace qx {

enum class Verdict { Holds, Fails, ReportOnly };

std::string verdict_name(Verdict v);

// Machine-readable record of one verified claim instance.
struct Certificate {
    std::string claim;  // THM1, THM2, PROP1, PROP2, PROP3-FORMULA, ...
    int n = 0;
    int k = -1;  // -1 when not applicable
    Verdict verdict = Verdict::ReportOnly;
    double max_value = 0.0;    // measured (search or eigensolver) value
    double closed_form = 0.0;  // closed-form / conjectured comparator
    double gap = 0.0;          // max_value - closed_form
    std::vector<std::string> witnesses;  // graph6, sorted
    std::uint64_t graphs_examined = 0;
    std::string note;
    double wall_ms = 0.0;  // timing; excluded from determinism comparisons
};

// Default tolerance for closed-form agreement and bound dominance.
inline constexpr double kVerifyTolerance = 1e-8;

// Exhaustive checks of the two theorems and the Mantel-type claim. The
// shard count only affects scheduling, never results.
Certificate verify_theorem_c4(int n, int shards = 1, double tol = kVerifyTolerance);
Certificate verify_theorem_c5(int n, int shards = 1, double tol = kVerifyTolerance);
Certificate verify_mantel_q(int n, int shards = 1, double tol = kVerifyTolerance);

enum class ConjectureKind { OddQ, EvenQ, EvenMu };

// Conjecture probes never assert FAILS: the conjectures are quantified
// over sufficiently large order, so small-n mismatches are data.
Certificate probe_conjecture(ConjectureKind kind, int n, int k, int shards = 1);

// Closed-form and bound claims evaluated per order.
Certificate verify_prop1(int n, double tol = kVerifyTolerance);
Certificate verify_prop2(int n, double tol = kVerifyTolerance);
Certificate verify_prop3(int n, double tol = kVerifyTolerance);
Certificate verify_starplus(int n);
Certificate verify_merris_dominance(int n, double tol = kVerifyTolerance);
Certificate verify_das_dominance(int n, double tol = kVerifyTolerance);
Certificate verify_erdos_gallai(int n);

struct ClaimRange {
    int lo = 0;
    int hi = 0;
};

struct SuiteConfig {
    std::vector<std::string> claims;  // subset of the known claim ids
    ClaimRange thm1{4, 9};
    ClaimRange thm2{5, 9};
    ClaimRange prop1{4, 50};
    ClaimRange prop2{4, 50};
    ClaimRange prop3{7, 49};
    ClaimRange mantel{3, 7};
    ClaimRange starplus{5, 50};
    ClaimRange bound_dom{4, 7};
    ClaimRange erdos_gallai{4, 7};
    ClaimRange conj{6, 9};
    int conj_k = 2;
    int shards = 1;
    double tol = kVerifyTolerance;
    std::string format = "csv";  // csv | json
    std::string out = "-";       // '-' = stdout
};

// THM1, THM2 and every proposition/bound claim; conjecture probes are
// opt-in via a config file.
SuiteConfig default_suite();

// Plain key = value lines, '#' comments. Throws std::invalid_argument on
// unknown keys or malformed values.
SuiteConfig parse_suite_config(std::istream& in);
SuiteConfig load_suite_config(const std::string& path_or_default);

std::vector<Certificate> run_suite(const SuiteConfig& config);

bool any_failure(std::span<const Certificate> certs);

void write_csv(std::ostream& out, std::span<const Certificate> certs);
void write_json(std::ostream& out, std::span<const Certificate> certs);

}  // namespace qx

#endif
