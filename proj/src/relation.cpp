#include "eulersums/relation.hpp"

#include <algorithm>

#include "eulersums/error.hpp"

// Fixed-point PSLQ after Bailey's formulation: every quantity is an integer scaled by 2^prec.

namespace eulersums {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
    return q;
}

Integer to_fixed(const HighFloat& x, long prec) {
    mpfr_t scaled;
    mpfr_init2(scaled, mpfr_get_prec(x.raw()));
    mpfr_mul_2si(scaled, x.raw(), prec, MPFR_RNDN);
    Integer out;
    mpfr_get_z(out.backend().data(), scaled, MPFR_RNDD);
    mpfr_clear(scaled);
    return out;
}

Integer sqrt_fixed(const Integer& x, long prec) { return boost::multiprecision::sqrt(Integer(x << prec)); }

Integer round_fixed(const Integer& x, long prec) { return ((x + (Integer(1) << (prec - 1))) >> prec) << prec; }

class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), data_((n + 1) * (n + 1)) {}
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * (n_ + 1) + j]; }

private:
    std::size_t n_;
    std::vector<Integer> data_;
};

} // namespace

std::optional<std::vector<Integer>> find_integer_relation(const std::vector<HighFloat>& input,
                                                          const RelationOptions& opts) {
    const std::size_t n = input.size();
    if (n < 2) {
        throw Error("integer relation needs at least two numbers");
    }
    long prec = opts.bits;
    if (prec == 0) {
        prec = std::numeric_limits<long>::max();
        for (const auto& v : input) {
            prec = std::min<long>(prec, mpfr_get_prec(v.raw()));
        }
    }
    const long target = prec * 3 / 4;
    prec += 60;
    const Integer tol = Integer(1) << (prec - target);

    std::vector<Integer> x(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        if (input[k - 1].is_zero()) {
            throw Error("integer relation input " + std::to_string(k - 1) + " is zero");
        }
        x[k] = to_fixed(input[k - 1], prec);
    }
    Integer minx = abs(x[1]);
    for (std::size_t k = 2; k <= n; ++k) {
        minx = std::min(minx, Integer(abs(x[k])));
    }
    if (minx < tol / 100) {
        return std::nullopt;
    }

    const Integer one = Integer(1) << prec;
    const Integer g = sqrt_fixed(floor_div(Integer(4) << prec, Integer(3)), prec);
    Matrix A(n), B(n), H(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            A(i, j) = B(i, j) = i == j ? one : Integer(0);
            H(i, j) = 0;
        }
    }
    std::vector<Integer> s(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        Integer t = 0;
        for (std::size_t j = k; j <= n; ++j) {
            t += (x[j] * x[j]) >> prec;
        }
        s[k] = sqrt_fixed(t, prec);
    }
    const Integer t0 = s[1];
    std::vector<Integer> y = x;
    for (std::size_t k = 1; k <= n; ++k) {
        y[k] = floor_div(x[k] << prec, t0);
        s[k] = floor_div(s[k] << prec, t0);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        if (i <= n - 1) {
            H(i, i) = s[i] != 0 ? floor_div(s[i + 1] << prec, s[i]) : Integer(0);
        }
        for (std::size_t j = 1; j < i; ++j) {
            const Integer sjj1 = s[j] * s[j + 1];
            H(i, j) = sjj1 != 0 ? floor_div(Integer(-y[i] * y[j]) << prec, sjj1) : Integer(0);
        }
    }

    auto reduce_row = [&](std::size_t i, std::size_t j) -> bool {
        if (H(j, j) == 0) {
            return false;
        }
        const Integer t = round_fixed(floor_div(H(i, j) << prec, H(j, j)), prec);
        y[j] += (t * y[i]) >> prec;
        for (std::size_t k = 1; k <= j; ++k) {
            H(i, k) -= (t * H(j, k)) >> prec;
        }
        for (std::size_t k = 1; k <= n; ++k) {
            A(i, k) -= (t * A(j, k)) >> prec;
            B(k, j) += (t * B(k, i)) >> prec;
        }
        return true;
    };

    for (std::size_t i = 2; i <= n; ++i) {
        for (std::size_t j = i - 1; j >= 1; --j) {
            reduce_row(i, j);
        }
    }

    auto found = [&]() -> std::optional<std::vector<Integer>> {
        for (std::size_t i = 1; i <= n; ++i) {
            if (abs(y[i]) < tol) {
                std::vector<Integer> relation;
                bool bounded = true;
                for (std::size_t j = 1; j <= n; ++j) {
                    relation.push_back(round_fixed(B(j, i), prec) >> prec);
                    bounded = bounded && abs(relation.back()) < opts.max_coeff;
                }
                if (bounded) {
                    return relation;
                }
            }
        }
        return std::nullopt;
    };
    // Unlike the textbook loop, test before the first exchange: the initial size reduction
    // already exposes relations between nearly proportional inputs.
    if (auto relation = found()) {
        return relation;
    }

    for (int step = 0; step < opts.max_steps; ++step) {
        std::size_t m = 0;
        Integer szmax = -1;
        Integer gpow = g;
        for (std::size_t i = 1; i < n; ++i) {
            const Integer sz = (gpow * abs(H(i, i))) >> (prec * static_cast<long>(i));
            if (sz > szmax) {
                m = i;
                szmax = sz;
            }
            gpow *= g;
        }
        std::swap(y[m], y[m + 1]);
        for (std::size_t i = 1; i <= n; ++i) {
            std::swap(H(m, i), H(m + 1, i));
            std::swap(A(m, i), A(m + 1, i));
            std::swap(B(i, m), B(i, m + 1));
        }
        if (m + 2 <= n) {
            const Integer r = sqrt_fixed((H(m, m) * H(m, m) + H(m, m + 1) * H(m, m + 1)) >> prec, prec);
            if (r == 0) {
                break;
            }
            const Integer t1 = floor_div(H(m, m) << prec, r);
            const Integer t2 = floor_div(H(m, m + 1) << prec, r);
            for (std::size_t i = m; i <= n; ++i) {
                const Integer t3 = H(i, m);
                const Integer t4 = H(i, m + 1);
                H(i, m) = (t1 * t3 + t2 * t4) >> prec;
                H(i, m + 1) = (-t2 * t3 + t1 * t4) >> prec;
            }
        }
        for (std::size_t i = m + 1; i <= n; ++i) {
            for (std::size_t j = std::min(i - 1, m + 1); j >= 1; --j) {
                if (!reduce_row(i, j)) {
                    break;
                }
            }
        }
        if (auto relation = found()) {
            return relation;
        }
    }
    return std::nullopt;
}

} // namespace eulersums
