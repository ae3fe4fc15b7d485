#include "eulersums/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "eulersums/error.hpp"

namespace eulersums {

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::error:
        return "error";
    }
    return "error";
}

std::string format_tolerance(double tolerance) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, tolerance);
    return std::string(buffer, result.ptr);
}

SumCache::SumCache(EvalOptions opts) : opts_(opts) { opts_.validate(); }

EvalResult SumCache::get(const SumSpec& spec) {
    std::shared_ptr<std::optional<EvalResult>> slot;
    std::shared_ptr<std::once_flag> once;
    {
        std::lock_guard lock(mutex_);
        auto& s = values_[spec];
        if (!s) {
            s = std::make_shared<std::optional<EvalResult>>();
            once_[spec] = std::make_shared<std::once_flag>();
        }
        slot = s;
        once = once_[spec];
    }
    // A throwing evaluation leaves the flag unset, so the next caller retries and rethrows.
    std::call_once(*once, [&] { *slot = evaluate_sum(spec, opts_); });
    return **slot;
}

EvalResult evaluate_combination(const SumCombination& combination, SumCache& cache) {
    const EvalOptions& opts = cache.options();
    const auto constants = ConstantsTable::shared(opts.digits);
    const Precision prec = constants->working_precision();
    HighFloat value(prec);
    HighFloat err(prec);
    for (const auto& term : combination.terms()) {
        const HighFloat coef = evaluate(term.coefficient, *constants);
        HighFloat product(prec, 1);
        HighFloat product_err(prec);
        for (const auto& spec : term.sums) {
            const EvalResult r = cache.get(spec);
            // (a + da)(b + db) - ab bounded by |a| db + |b| da + da db.
            product_err = abs(product) * r.err_estimate + abs(r.value) * product_err + product_err * r.err_estimate;
            product *= r.value;
        }
        value += coef * product;
        err += abs(coef) * product_err;
    }
    return EvalResult{value, err, opts.K, opts.digits};
}

VerificationReport verify(const Identity& identity, const VerifyOptions& opts, SumCache& cache) {
    VerificationReport report;
    report.id = identity.id;
    report.tolerance = opts.tolerance;
    report.digits = opts.eval.digits;
    report.K = opts.eval.K;
    report.source = identity.source;
    report.expected = identity.expected;
    try {
        const auto constants = ConstantsTable::shared(opts.eval.digits);
        const EvalResult lhs = evaluate_combination(identity.lhs, cache);
        const HighFloat rhs = evaluate(identity.rhs, *constants);
        report.lhs_value = lhs.value;
        report.err_estimate = lhs.err_estimate;
        report.rhs_value = rhs;
        report.residual = abs(lhs.value - rhs);
        const HighFloat tol(constants->working_precision(), format_tolerance(opts.tolerance));
        report.verdict = *report.residual <= tol ? Verdict::pass : Verdict::fail;
    } catch (const std::exception& e) {
        report.verdict = Verdict::error;
        report.message = identity.id + ": " + e.what();
    }
    return report;
}

VerificationReport verify(const Identity& identity, const VerifyOptions& opts) {
    SumCache cache(opts.eval);
    return verify(identity, opts, cache);
}

std::vector<VerificationReport> verify_all(const Catalog& catalog, const VerifyOptions& opts) {
    const auto& entries = catalog.entries();
    std::vector<VerificationReport> reports(entries.size());
    if (entries.empty()) {
        return reports;
    }
    SumCache cache(opts.eval);
    unsigned threads = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(entries.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            reports[i] = verify(entries[i], opts, cache);
        }
    };
    if (threads == 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    pool.clear();
    return reports;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
    VerifySummary s;
    for (const auto& r : reports) {
        switch (r.verdict) {
        case Verdict::pass:
            ++s.passed;
            break;
        case Verdict::fail:
            ++s.failed;
            break;
        case Verdict::error:
            ++s.errors;
            break;
        }
        if (r.must_pass_failure()) {
            s.must_pass_failures.push_back(r.id);
        }
    }
    return s;
}

std::string VerifySummary::to_string() const {
    std::string out = std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " +
                      std::to_string(errors) + " errors";
    if (must_pass_failures.empty()) {
        return out + "; all must_pass identities hold";
    }
    out += "; must_pass failures:";
    for (const auto& id : must_pass_failures) {
        out += " " + id;
    }
    return out;
}

} // namespace eulersums
