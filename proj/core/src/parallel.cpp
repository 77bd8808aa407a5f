#include "eqlr/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace eqlr::parallel {

namespace {

std::atomic<int> g_threads{0};

int from_env() {
    const char* s = std::getenv("EQLR_THREADS");
    if (!s || !*s) return 0;
    try {
        return std::max(0, std::stoi(s));
    } catch (...) {
        return 0;
    }
}

}  // namespace

int threads() {
    int t = g_threads.load();
    if (t > 0) return t;
    t = from_env();
    if (t > 0) return t;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void set_threads(int n) { g_threads.store(n > 0 ? n : 0); }

}  // namespace eqlr::parallel
