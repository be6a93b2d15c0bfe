#include "permcover/counting.hpp"

#include <stdexcept>
#include <string>

namespace permcover {

namespace {

void check_n(long long n, const char* who) {
    if (n < 2)
        throw std::invalid_argument(std::string(who) + ": n must be >= 2, got " +
                                    std::to_string(n));
}

// Counts below the range of the general parity formulas.
// Q*: n=2 has the single set {21}; n=3 has three 2-element sets.
// P*: n=2 is {S_2}; n=3 the two shift orbits; n=4 six orbits plus six
// relabelings of the unique Q*_4.
struct SmallCount {
    long long n;
    int value;
};
constexpr SmallCount kSmallQStar[] = {{2, 1}, {3, 3}};
constexpr SmallCount kSmallPStar[] = {{2, 1}, {3, 2}, {4, 12}};

ExactCount pow_exact(const ExactCount& base, const ExactCount& exponent) {
    if (exponent < 0) throw std::invalid_argument("pow_exact: negative exponent");
    ExactCount result = 1, b = base, e = exponent;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

}  // namespace

ExactCount factorial(long long k) {
    if (k < 0) throw std::invalid_argument("factorial: negative argument");
    ExactCount out = 1;
    for (long long v = 2; v <= k; ++v) out *= v;
    return out;
}

ExactCount binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    ExactCount out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;  // exact: out is C(n-k+i, i) after each step
    }
    return out;
}

ExactCount gamma_I(long long n) {
    check_n(n, "gamma_I");
    return ExactCount(n) * n / 4;
}

ExactCount gamma_P(long long n) {
    check_n(n, "gamma_P");
    const ExactCount quarter = gamma_I(n);
    return quarter > n ? quarter : ExactCount(n);
}

ExactCount count_Q_star(long long n) {
    check_n(n, "count_Q_star");
    for (const SmallCount& entry : kSmallQStar)
        if (entry.n == n) return entry.value;
    const long long half = n / 2;
    if (n % 2 == 0) return pow_exact(factorial(half - 1), ExactCount(n) * n / 2);
    return 2 * pow_exact(factorial(half - 1) * factorial(half), gamma_I(n));
}

ExactCount count_P_star(long long n) {
    check_n(n, "count_P_star");
    for (const SmallCount& entry : kSmallPStar)
        if (entry.n == n) return entry.value;
    return binomial(n, n / 2) * count_Q_star(n);
}

ExactCount family_size(long long n, long long c) {
    check_n(n, "family_size");
    if (!(1 <= c && c < n))
        throw std::invalid_argument("family_size: need 1 <= c < n, got c = " + std::to_string(c));
    return factorial(c - 1) * factorial(n - c - 1);
}

ExactCount transversal_count(long long n, long long c) {
    check_n(n, "transversal_count");
    if (!(1 <= c && c < n))
        throw std::invalid_argument("transversal_count: need 1 <= c < n, got c = " +
                                    std::to_string(c));
    return pow_exact(family_size(n, c), ExactCount(c) * (n - c));
}

}  // namespace permcover
