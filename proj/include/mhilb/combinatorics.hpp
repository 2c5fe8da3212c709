#pragma once

#include <functional>
#include <vector>

namespace mhilb {

// Calls fn on every k-subset of {0..n-1} in lexicographic order; stops when fn returns false.
inline void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!fn(c)) return;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

template <class T>
std::vector<T> pick(const std::vector<T>& xs, const std::vector<int>& idx) {
    std::vector<T> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(xs[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace mhilb
