#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eqlr/core.hpp"
#include "eqlr/polyring.hpp"
#include "eqlr/tableaux.hpp"
#include "eqlr/weights.hpp"

namespace testing {

using eqlr::core::Partition;
using eqlr::polyring::Family;
using eqlr::polyring::MPoly;
using eqlr::weights::WeightFactor;

inline Partition P(std::vector<int> v) { return Partition(std::move(v)); }
inline MPoly y(int i) { return MPoly::y(i); }
inline MPoly Y(int i) { return MPoly::Y(i); }
inline MPoly x(int i) { return MPoly::x(i); }

inline WeightFactor yf(int e, int f) { return {Family::y, e, f}; }
inline WeightFactor Yf(int e, int f) { return {Family::Y, e, f}; }

// Sorted factor lists of a sum of products, sorted again as a list.
using FactorLists = std::vector<std::vector<WeightFactor>>;
inline FactorLists normalized(FactorLists v) {
    for (auto& f : v) std::sort(f.begin(), f.end());
    std::sort(v.begin(), v.end());
    return v;
}

inline MPoly expand(const FactorLists& v) {
    MPoly total;
    for (const auto& fs : v) {
        MPoly t{1};
        for (const auto& f : fs) t *= f.poly();
        total += t;
    }
    return total;
}

// Ordinary Schur polynomial in x_1..x_d from semistandard tableaux, brute force.
inline MPoly schur_ssyt(const Partition& lambda) {
    int d = lambda.d();
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < lambda[r]; ++c) boxes.push_back({r, c});
    std::map<std::pair<int, int>, int> t;
    MPoly total;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == boxes.size()) {
            MPoly m{1};
            for (auto& [b, v] : t) m *= x(v);
            total += m;
            return;
        }
        auto [r, c] = boxes[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[{r, c - 1}]);
        if (r > 0) lo = std::max(lo, t[{r - 1, c}] + 1);
        for (int v = lo; v <= d; ++v) {
            t[{r, c}] = v;
            rec(k + 1);
        }
        t.erase({r, c});
    };
    rec(0);
    return total;
}

inline std::string data_path(const std::string& name) { return std::string(EQLR_TEST_DATA_DIR) + "/" + name; }

}  // namespace testing
