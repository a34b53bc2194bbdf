#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinrep {

// Crossingless pairing of the boundary of the rectangle: points 0..n-1 run
// down the left side (top to bottom), points n..n+c-1 up the clasp side
// (bottom to top), so that consecutive indices are cyclically adjacent.
class PlanarMatching {
  public:
    PlanarMatching() = default;
    PlanarMatching(int n, int c, std::vector<int> pairing) : n_(n), c_(c), pair_(std::move(pairing)) {}

    int left_points() const { return n_; }
    int clasp_points() const { return c_; }
    int total_points() const { return n_ + c_; }
    int partner(int i) const { return pair_[static_cast<size_t>(i)]; }
    const std::vector<int>& pairing() const { return pair_; }

    bool is_clasp_point(int i) const { return i >= n_; }

    bool is_involution() const {
        int m = total_points();
        if (static_cast<int>(pair_.size()) != m || m % 2 != 0) return false;
        for (int i = 0; i < m; ++i) {
            int j = pair_[static_cast<size_t>(i)];
            if (j < 0 || j >= m || j == i || pair_[static_cast<size_t>(j)] != i) return false;
        }
        return true;
    }

    // Noncrossing with respect to the cyclic boundary order, checked on the
    // linearization 0..m-1 (cutting the circle between m-1 and 0).
    bool is_noncrossing() const {
        std::vector<int> stack;
        for (int i = 0; i < total_points(); ++i) {
            int j = pair_[static_cast<size_t>(i)];
            if (j > i) {
                stack.push_back(i);
            } else {
                if (stack.empty() || stack.back() != j) return false;
                stack.pop_back();
            }
        }
        return stack.empty();
    }

    bool has_clasp_turnback() const {
        for (int i = n_; i < total_points(); ++i)
            if (pair_[static_cast<size_t>(i)] >= n_) return true;
        return false;
    }

    // Vertical flip: reverses the left points and the clasp points.
    PlanarMatching flipped() const {
        int m = total_points();
        auto f = [&](int i) { return i < n_ ? n_ - 1 - i : n_ + (c_ - 1 - (i - n_)); };
        std::vector<int> p(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) p[static_cast<size_t>(f(i))] = f(pair_[static_cast<size_t>(i)]);
        return PlanarMatching(n_, c_, std::move(p));
    }

    friend bool operator==(const PlanarMatching& a, const PlanarMatching& b) {
        return a.n_ == b.n_ && a.c_ == b.c_ && a.pair_ == b.pair_;
    }
    friend bool operator!=(const PlanarMatching& a, const PlanarMatching& b) { return !(a == b); }
    friend bool operator<(const PlanarMatching& a, const PlanarMatching& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.c_ != b.c_) return a.c_ < b.c_;
        return a.pair_ < b.pair_;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < total_points(); ++i) {
            int j = pair_[static_cast<size_t>(i)];
            if (j > i) os << "(" << i + 1 << " " << j + 1 << ")";
        }
        return os.str();
    }

    // Number of black regions mod 2 under the bicoloring with the top region
    // white. For noncrossing chords the inner face of a chord at nesting depth
    // d (0-based, cut at the top boundary arc) is black exactly when d is even.
    int bicolor_parity() const {
        int blacks = 0;
        std::vector<int> stack;
        for (int i = 0; i < total_points(); ++i) {
            int j = pair_[static_cast<size_t>(i)];
            if (j > i) {
                if (stack.size() % 2 == 0) ++blacks;
                stack.push_back(i);
            } else {
                stack.pop_back();
            }
        }
        return blacks % 2;
    }

  private:
    int n_ = 0, c_ = 0;
    std::vector<int> pair_;
};

namespace detail {

inline void enumerate_noncrossing(int m, std::vector<int>& pair, int from, std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int i = from; i < m; ++i)
        if (pair[static_cast<size_t>(i)] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        out.push_back(pair);
        return;
    }
    for (int j = first + 1; j < m; ++j) {
        if (pair[static_cast<size_t>(j)] >= 0) break;  // contiguous free block: partner must be inside
        if ((j - first) % 2 == 0) continue;
        // pairing (first, j) splits the free block; both sides handled recursively
        pair[static_cast<size_t>(first)] = j;
        pair[static_cast<size_t>(j)] = first;
        enumerate_noncrossing(m, pair, first + 1, out);
        pair[static_cast<size_t>(first)] = -1;
        pair[static_cast<size_t>(j)] = -1;
    }
}

}  // namespace detail

// All noncrossing perfect matchings of m cyclically ordered points; the cut
// between m-1 and 0 makes cyclic noncrossing equal to nested parentheses.
inline std::vector<std::vector<int>> all_noncrossing_pairings(int m) {
    std::vector<std::vector<int>> out;
    if (m % 2 != 0) return out;
    std::vector<int> pair(static_cast<size_t>(m), -1);
    detail::enumerate_noncrossing(m, pair, 0, out);
    return out;
}

// Basis of W(n*1, c): clasp-admissible noncrossing matchings in ascending
// lexicographic order of the pairing involution.
inline const std::vector<PlanarMatching>& enumerate_basis(int n, int c) {
    static std::map<std::pair<int, int>, std::vector<PlanarMatching>> cache;
    static std::mutex mu;
    if (n < 0 || c < 0) throw std::domain_error("enumerate_basis: negative arguments");
    if ((n + c) % 2 != 0) throw std::domain_error("enumerate_basis: n + c must be even");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, c});
    if (it != cache.end()) return it->second;
    std::vector<PlanarMatching> basis;
    for (auto& p : all_noncrossing_pairings(n + c)) {
        PlanarMatching m(n, c, p);
        if (!m.has_clasp_turnback()) basis.push_back(std::move(m));
    }
    std::sort(basis.begin(), basis.end());
    return cache.emplace(std::make_pair(n, c), std::move(basis)).first->second;
}

// Temperley-Lieb (k,k) diagrams: turnbacks allowed on both sides.
inline const std::vector<PlanarMatching>& enumerate_tl_diagrams(int k) {
    static std::map<int, std::vector<PlanarMatching>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<PlanarMatching> all;
    for (auto& p : all_noncrossing_pairings(2 * k)) all.emplace_back(k, k, p);
    std::sort(all.begin(), all.end());
    return cache.emplace(k, std::move(all)).first->second;
}

// Two pairings glued along `sews`; ports of the first block are 0..|a|-1 and
// of the second |a|..|a|+|b|-1. Returns the induced pairing on un-sewn ports
// (-1 entries for sewn ones) together with the number of closed loops.
struct GlueOutcome {
    std::vector<int> boundary_pair;
    int loops = 0;
};

inline GlueOutcome glue_pairings(const std::vector<int>& a, const std::vector<int>& b,
                                 const std::vector<std::pair<int, int>>& sews) {
    size_t na = a.size(), nb = b.size();
    size_t total = na + nb;
    std::vector<int> diagram(total), sew(total, -1);
    for (size_t i = 0; i < na; ++i) diagram[i] = a[i];
    for (size_t i = 0; i < nb; ++i) diagram[na + i] = b[i] + static_cast<int>(na);
    for (auto [p, q] : sews) {
        if (sew[static_cast<size_t>(p)] != -1 || sew[static_cast<size_t>(q)] != -1)
            throw std::logic_error("glue_pairings: port sewn twice");
        sew[static_cast<size_t>(p)] = q;
        sew[static_cast<size_t>(q)] = p;
    }
    GlueOutcome out;
    out.boundary_pair.assign(total, -1);
    std::vector<char> seen(total, 0);
    for (size_t p = 0; p < total; ++p) {
        if (seen[p] || sew[p] != -1) continue;
        int cur = static_cast<int>(p);
        seen[p] = 1;
        while (true) {
            int q = diagram[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(q)] = 1;
            if (sew[static_cast<size_t>(q)] == -1) {
                out.boundary_pair[p] = q;
                out.boundary_pair[static_cast<size_t>(q)] = static_cast<int>(p);
                break;
            }
            cur = sew[static_cast<size_t>(q)];
            seen[static_cast<size_t>(cur)] = 1;
        }
    }
    for (size_t p = 0; p < total; ++p) {
        if (seen[p]) continue;
        ++out.loops;
        int cur = static_cast<int>(p);
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = 1;
            int q = diagram[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(q)] = 1;
            cur = sew[static_cast<size_t>(q)];
        }
    }
    return out;
}

}  // namespace skeinrep
