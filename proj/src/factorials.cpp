#include "icekernel/factorials.hpp"

#include <mutex>

#include "icekernel/errors.hpp"

namespace icekernel {

namespace {

std::mutex g_cache_mutex;
std::vector<BigInt> g_cache = {BigInt(1)};  // g_cache[n] = n!
std::size_t g_cache_cap = 512;

}  // namespace

void set_factorial_cache_cap(std::size_t cap) {
    std::lock_guard lock(g_cache_mutex);
    g_cache_cap = cap;
    if (g_cache.size() > cap + 1) g_cache.resize(cap + 1);
}

BigInt factorial(long long n) {
    if (n < 0) throw NegativeFactorial("factorial of negative argument " + std::to_string(n));
    std::lock_guard lock(g_cache_mutex);
    if (static_cast<std::size_t>(n) <= g_cache_cap) {
        while (g_cache.size() <= static_cast<std::size_t>(n)) {
            g_cache.push_back(g_cache.back() * BigInt(g_cache.size()));
        }
        return g_cache[static_cast<std::size_t>(n)];
    }
    BigInt r = g_cache.back();
    for (long long k = static_cast<long long>(g_cache.size()); k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (n < 0) throw NegativeFactorial("binomial requires n >= 0, got " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

BigRat factorial_ratio(std::span<const long long> numer,
                       std::span<const long long> denom) {
    BigInt num = 1, den = 1;
    for (long long a : numer) num *= factorial(a);
    for (long long a : denom) den *= factorial(a);
    return BigRat(num, den);
}

BigRat factorial_ratio(std::initializer_list<long long> numer,
                       std::initializer_list<long long> denom) {
    return factorial_ratio(std::span<const long long>(numer.begin(), numer.size()),
                           std::span<const long long>(denom.begin(), denom.size()));
}

}  // namespace icekernel
