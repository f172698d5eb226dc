#include "modist/integers.hpp"

#include <stdexcept>

namespace modist {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 30 Miller-Rabin rounds; mpz_probab_prime_p is exact below 2^64 anyway,
    // which covers everything this library produces.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Int, int>> factor(const Int& n) {
    if (n == 0) throw std::invalid_argument("factor: argument is zero");
    Int m = abs(n);
    std::vector<std::pair<Int, int>> out;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Int p = 5;
    while (p * p <= m) {
        strip(p);
        strip(p + 2);
        p += 6;
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

std::pair<Int, Int> squarefree_part(const Int& n) {
    if (n < 1) throw std::invalid_argument("squarefree_part: argument must be >= 1");
    Int q = 1, r = 1;
    for (const auto& [p, e] : factor(n)) {
        for (int i = 0; i < e / 2; ++i) q *= p;
        if (e % 2 == 1) r *= p;
    }
    return {q, r};
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("valuation: argument is zero");
    if (p < 2) throw std::invalid_argument("valuation: modulus must be >= 2");
    Int m = abs(n);
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

}  // namespace modist
