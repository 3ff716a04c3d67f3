#ifndef ZETALAB_BERNOULLI_HPP
#define ZETALAB_BERNOULLI_HPP

#include <zetalab/real.hpp>

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace zetalab {

// The two conventions differ only at n = 1.
enum class BernoulliConvention { b1_minus_half, b1_plus_half };

// Exact Bernoulli numbers from  sum_{k=0}^{n} C(n+1, k) B_k = 0,
// memoized. Readers share the lock; extending the table takes it exclusively.
class BernoulliTable {
public:
    static BernoulliTable& instance()
    {
        static BernoulliTable table;
        return table;
    }

    // B_n with B_1 = -1/2.
    Rat get(unsigned n)
    {
        {
            std::shared_lock lock(mutex_);
            if (n < values_.size())
                return values_[n];
        }
        std::unique_lock lock(mutex_);
        extend(n);
        return values_[n];
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return values_.size();
    }

private:
    BernoulliTable() { values_.emplace_back(1); }

    void extend(unsigned n)
    {
        while (values_.size() <= n) {
            const unsigned m = static_cast<unsigned>(values_.size());
            if (m >= 3 && m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            mpz_class binom = 1; // C(m+1, 0)
            Rat acc = 0;
            for (unsigned k = 0; k < m; ++k) {
                if (values_[k] != 0)
                    acc += Rat(binom) * values_[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            Rat b = -acc / Rat(m + 1);
            b.canonicalize();
            values_.push_back(b);
        }
    }

    mutable std::shared_mutex mutex_;
    std::vector<Rat> values_;
};

inline Rat bernoulli(unsigned n, BernoulliConvention convention = BernoulliConvention::b1_minus_half)
{
    Rat b = BernoulliTable::instance().get(n);
    if (n == 1 && convention == BernoulliConvention::b1_plus_half)
        b = -b;
    return b;
}

// B_{2k} / (2k)!  for k = 1..count, at the given precision. These are the
// Euler–Maclaurin and Stirling-series coefficients.
inline std::vector<Real> even_bernoulli_over_factorial(unsigned count, int digits)
{
    std::vector<Real> out;
    out.reserve(count);
    mpz_class fact = 1;
    for (unsigned k = 1; k <= count; ++k) {
        fact *= (2 * k - 1) * (2 * k);
        out.emplace_back(bernoulli(2 * k) / Rat(fact), digits);
    }
    return out;
}

} // namespace zetalab

#endif
