#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace skeinrep {

// r = infinity is encoded as 0 (t not a root of unity).
inline constexpr long r_infinity = 0;

// d(n, c, r) = dim X(n*1, c, t) by the recurrence
//   d(0,0) = 1, d(0,c>0) = 0,
//   d(n,c) = d(n-1,c-1) + d(n-1,c+1)   (0 < c < r-2)
//   d(n,0) = d(n-1,1), d(n,r-2) = d(n-1,r-3),
// with colors clamped to the admissible range 0..r-2 for finite r.
inline long long dimension(long n, long c, long r = r_infinity) {
    if (n < 0) throw std::domain_error("dimension: n < 0");
    if (r != r_infinity && r < 2) throw std::domain_error("dimension: r < 2");
    if (c < 0 || (r != r_infinity && c > r - 2)) throw std::domain_error("dimension: inadmissible color");
    static std::map<std::tuple<long, long, long>, long long> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    std::function<long long(long, long)> go = [&](long nn, long cc) -> long long {
        if (cc < 0 || (r != r_infinity && cc > r - 2)) return 0;
        if (nn == 0) return cc == 0 ? 1 : 0;
        auto key = std::make_tuple(nn, cc, r);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long v = go(nn - 1, cc - 1) + go(nn - 1, cc + 1);
        memo.emplace(key, v);
        return v;
    };
    return go(n, c);
}

// e(n,c,r) = d(n,c,r) - d(n,r-2-c,r); satisfies the d(n,c,r/2) recurrence.
inline long long dimension_difference(long n, long c, long r) {
    if (r == r_infinity || r % 2 != 0) throw std::domain_error("dimension_difference: r must be finite even");
    return dimension(n, c, r) - dimension(n, r - 2 - c, r);
}

}  // namespace skeinrep
