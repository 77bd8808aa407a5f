#include "doctest.h"
#include "support.hpp"

using namespace eqlr;
using namespace testing;

TEST_CASE("partition parsing pads and rejects bad input") {
    CHECK(core::parse_partition("3,2", 3) == P({3, 2, 0}));
    CHECK(core::parse_partition("-", 2) == P({0, 0}));
    CHECK(core::parse_partition("", 2) == P({0, 0}));
    CHECK_THROWS_AS(core::parse_partition("1,2", 2), DomainError);
    CHECK_THROWS_AS(core::parse_partition("1,a", 2), DomainError);
    CHECK_THROWS_AS(core::parse_partition("1,1,1", 2), DomainError);
    CHECK_THROWS_AS(Partition({1, -1}), DomainError);
}

TEST_CASE("boundary words round trip over every partition in a box") {
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; d <= n; ++d)
            for (const auto& p : core::partitions_in_box(d, n - d)) {
                auto w = core::partition_to_word(p, n);
                CHECK(w.d() == d);
                CHECK(core::word_to_partition(w) == p);
                CHECK(core::BoundaryWord::parse(w.str()) == w);
            }
}

TEST_CASE("figure boundary words decode to the stated partitions") {
    CHECK(core::word_to_partition(core::BoundaryWord::parse("001001100")) == P({4, 2, 2}));
    CHECK(core::word_to_partition(core::BoundaryWord::parse("001010010")) == P({4, 3, 1}));
    CHECK(core::word_to_partition(core::BoundaryWord::parse("101000100")) == P({6, 5, 2}));
}

TEST_CASE("partitions in a box are counted by binomial coefficients") {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    for (int d = 1; d <= 4; ++d)
        for (int m = 0; m <= 4; ++m) CHECK(static_cast<long>(core::partitions_in_box(d, m).size()) == binom(d + m, d));
    CHECK(core::partitions_inside(P({3, 3, 3})).size() == 20);
}

TEST_CASE("conjugate is an involution") {
    for (const auto& p : core::partitions_in_box(4, 4)) {
        auto c = core::conjugate(p);
        CHECK(core::conjugate(c).padded(4) == p);
        CHECK(c.size() == p.size());
    }
}

TEST_CASE("yamanouchi matches a direct prefix count") {
    std::vector<int> w;
    std::function<void(int)> rec = [&](int len) {
        std::vector<int> cnt(4, 0);
        bool ok = true;
        for (int v : w) {
            ++cnt[static_cast<size_t>(v)];
            if (v > 1 && cnt[static_cast<size_t>(v)] > cnt[static_cast<size_t>(v - 1)]) ok = false;
        }
        CHECK(core::is_yamanouchi(w) == ok);
        if (len == 0) return;
        for (int v = 1; v <= 3; ++v) {
            w.push_back(v);
            rec(len - 1);
            w.pop_back();
        }
    };
    rec(5);
}

TEST_CASE("content, rho and swapped") {
    std::vector<int> w{1, 1, 2, 3, 2, 4, 3, 1, 2};
    CHECK(core::content(w, 4) == core::Composition({3, 3, 2, 1}));
    CHECK(core::rho(3) == P({2, 1, 0}));
    CHECK(core::Composition({5, 7, 1}).swapped(1) == core::Composition({7, 5, 1}));
    CHECK(core::Composition({5, 7, 1}).swapped(2) == core::Composition({5, 1, 7}));
    CHECK(core::primed(1, 4) == 4);
}
