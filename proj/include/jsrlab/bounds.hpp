#ifndef JSRLAB_BOUNDS_HPP
#define JSRLAB_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jsrlab/family.hpp"

namespace jsrlab {

struct BoundsOptions {
    int k_max = 12;
    std::vector<NormKind> norms = {NormKind::row_sum(), NormKind::spectral(),
                                   NormKind::column_sum()};
    std::uint64_t budget = kDefaultBudget;  // unit: one n x n multiplication
};

struct UpperEntry {
    double value = 0.0;
    Word witness;
};

/// Finite-k characterizations at one product length.
struct BoundsRecord {
    int k = 0;
    double lower = 0.0;        // max over necklaces of rho(P)^(1/k)
    Word lower_witness;
    std::vector<UpperEntry> upper;  // max over all words of ||P||^(1/k), per norm
    double msr = 0.0;          // max over necklaces of |tr P|^(1/k); diagnostic
};

/// Best bounds accumulated over all computed lengths.
struct Bracket {
    double best_lower = 0.0;
    Word lower_witness;
    double best_upper = 0.0;
    int upper_k = 0;
    std::size_t upper_norm_index = 0;
    std::string upper_norm_name;
    int k_max_reached = 0;
    std::uint64_t multiplications = 0;
    bool budget_exhausted = false;
};

struct BracketResult {
    Bracket bracket;
    std::vector<BoundsRecord> records;
};

struct LowerBound {
    double value = 0.0;
    Word witness;
};

/// max over necklaces of length k of rho(P_w)^(1/k); witness is the
/// lexicographically least maximizer.
LowerBound lower_bound_k(const Family& f, int k,
                         std::uint64_t budget = kDefaultBudget);

/// max over all words of length k of ||P_w||^(1/k) for the given norm.
UpperEntry upper_bound_k(const Family& f, int k, const NormKind& kind,
                         std::uint64_t budget = kDefaultBudget);

/// max over necklaces of |tr(P_w)|^(1/k). Diagnostic only: finite-k traces
/// may cancel below the true growth rate, so this never tightens a Bracket.
double msr_estimate_k(const Family& f, int k,
                      std::uint64_t budget = kDefaultBudget);

/// Runs lengths 1..k_max, accumulating the bracket
///   best_lower = max_k lower_k   <=   rho(F)   <=   min_{k,norm} upper_k.
BracketResult bracket(const Family& f, const BoundsOptions& opts = {});

struct StableVerdict {
    double value = 0.0;  // certified upper bound, < 1
    int k = 0;           // 0 when the certificate came from a closed form
    std::optional<NormKind> norm;
    std::string closed_form_rule;
};

struct UnstableVerdict {
    double value = 0.0;  // witnessed lower bound, >= 1 up to the margin
    Word witness;
};

struct UndecidedVerdict {
    Bracket bracket;
    std::string note;
};

using StabilityVerdict =
    std::variant<StableVerdict, UnstableVerdict, UndecidedVerdict>;

/// Margin around 1 inside which a bound is treated as a boundary value and
/// the iteration keeps going instead of flipping a verdict on roundoff.
inline constexpr double kStabilityMargin = 1e-10;

/// Iterates k = 1, 2, ... until some upper_k < 1 - margin (Stable), some
/// lower_k reaches 1 within the margin (Unstable, with witness), or the
/// multiplication budget runs out (Undecided, with the bracket so far).
/// Families whose exact closed-form value sits on the boundary |rho - 1| <=
/// margin are reported Undecided up front: no finite enumeration can settle
/// them and roundoff must not pick a side.
StabilityVerdict decide_stability(const Family& f,
                                  std::uint64_t budget = kDefaultBudget);

struct SmpCandidate {
    Word word;           // canonical necklace
    double value = 0.0;  // rho(P_w)^(1/|w|)
    bool minimal = false;
    bool certified = false;
    std::optional<EllipsoidalShape> certificate;
};

/// All necklaces up to k_max whose normalized spectral radius comes within
/// relative 1e-9 of the best lower bound, sorted by (length, lexicographic).
std::vector<SmpCandidate> smp_candidates(const Family& f, int k_max,
                                         std::uint64_t budget = kDefaultBudget);

/// Unit eigenvector of the candidate product for an eigenvalue of maximal
/// modulus. Deterministic: among max-modulus eigenvalues the one with the
/// largest (real, imag) pair is taken and the phase is fixed so the first
/// nonzero component is real positive.
Vector leading_eigenvector(const Family& f, const SmpCandidate& c);

struct SmpSearchOptions {
    int max_iters = 400;
};

struct SmpValidation {
    bool certified = false;
    std::optional<EllipsoidalShape> shape;
    double achieved = 0.0;  // best max_i ||A_i||_P found
    double ratio = 0.0;     // achieved / candidate value
};

/// Searches for an ellipsoidal norm with max_i ||A_i||_P <= value*(1+1e-6).
/// Success certifies rho(F) = value up to 1e-6 relative (candidate from
/// below, extremal-norm property from above). Failure is reported, never
/// treated as an error and never used to discard the candidate.
SmpValidation validate_smp(const Family& f, const SmpCandidate& c,
                           const SmpSearchOptions& opts = {});

struct CsrRefineResult {
    EllipsoidalShape shape;
    double upper = 0.0;  // achieved max_i ||A_i||_P, a valid upper bound
};

/// Greedy improvement of max_i ||A_i||_P over ellipsoidal shapes, starting
/// from p0. Monotone non-increasing; every intermediate value is a valid
/// upper bound on rho(F).
CsrRefineResult csr_refine(const Family& f, const EllipsoidalShape& p0,
                           int iters);

}  // namespace jsrlab

#endif  // JSRLAB_BOUNDS_HPP
