#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eulersums/catalog.hpp"
#include "eulersums/summation.hpp"

namespace eulersums {

enum class Verdict { pass, fail, error };
std::string to_string(Verdict verdict);

struct VerifyOptions {
    EvalOptions eval;
    /// Absolute tolerance on |lhs - rhs|.
    double tolerance = 1e-11;
    /// Worker threads for verify_all; 0 picks hardware concurrency.
    unsigned threads = 0;
};

struct VerificationReport {
    std::string id;
    std::optional<HighFloat> lhs_value;
    std::optional<HighFloat> rhs_value;
    std::optional<HighFloat> residual;
    /// Propagated truncation estimate of the lhs.
    std::optional<HighFloat> err_estimate;
    double tolerance = 0;
    Verdict verdict = Verdict::error;
    int digits = 0;
    long K = 0;
    Source source = Source::published;
    Expectation expected = Expectation::must_pass;
    /// Failure reason for Verdict::error.
    std::string message;

    bool must_pass_failure() const { return expected == Expectation::must_pass && verdict != Verdict::pass; }
};

/// Memoizes evaluate_sum per spec for one EvalOptions. Thread-safe.
class SumCache {
public:
    explicit SumCache(EvalOptions opts);

    const EvalOptions& options() const noexcept { return opts_; }
    EvalResult get(const SumSpec& spec);

private:
    EvalOptions opts_;
    std::mutex mutex_;
    std::map<SumSpec, std::shared_ptr<std::optional<EvalResult>>> values_;
    std::map<SumSpec, std::shared_ptr<std::once_flag>> once_;
};

/// Value of a combination with the propagated error bound.
EvalResult evaluate_combination(const SumCombination& combination, SumCache& cache);

/// Evaluation errors are captured in the report as Verdict::error with the id in the message.
VerificationReport verify(const Identity& identity, const VerifyOptions& opts);
VerificationReport verify(const Identity& identity, const VerifyOptions& opts, SumCache& cache);

/// One report per entry, in catalog order.
std::vector<VerificationReport> verify_all(const Catalog& catalog, const VerifyOptions& opts);

struct VerifySummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    std::vector<std::string> must_pass_failures;

    bool ok() const noexcept { return must_pass_failures.empty(); }
    std::string to_string() const;
};

/// Shortest round-trip decimal form, e.g. "1e-11".
std::string format_tolerance(double tolerance);

VerifySummary summarize(const std::vector<VerificationReport>& reports);

} // namespace eulersums
