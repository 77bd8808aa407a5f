#include "doctest.h"
#include "support.hpp"

using namespace eqlr;
using namespace eqlr::weights;
using namespace testing;

namespace {

FactorLists positive_lists(const Partition& l, const Partition& m, const Partition& nu) {
    FactorLists out;
    for (const auto& L : tableaux::enumerate_lr_tableaux(l, m, nu))
        if (is_positive(L, Criterion::C1)) out.push_back(weight_c_L(L).factors);
    return normalized(out);
}

}  // namespace

TEST_CASE("worked skew tableau has weight zero") {
    auto shape = tableaux::make_shape(P({4, 3, 1, 0}));
    tableaux::BarredTableau B{shape, {{2, false}, {3, true}, {4, false}, {1, true}, {3, false}, {1, false}, {2, true}, {2, false}}};
    SkewBarredTableau L{P({2, 1, 1, 0}), B};
    auto w = weight_c_L(L);
    CHECK(normalized({w.factors}) == normalized({{yf(5, 5), yf(6, 4), yf(3, 1)}}));
    CHECK(w.poly.is_zero());
    for (auto c : all_criteria) CHECK_FALSE(is_positive(L, c));
}

TEST_CASE("LR+ tableaux of the small example and its transpose") {
    auto nu = P({3, 2, 1});
    CHECK(positive_lists(P({1, 1, 0}), P({3, 2, 0}), nu) ==
          normalized({{yf(6, 5)}, {yf(5, 3)}, {yf(4, 2)}, {yf(3, 1)}}));
    CHECK(positive_lists(P({3, 2, 0}), P({1, 1, 0}), nu) == normalized({{yf(6, 2)}, {yf(4, 1)}}));
    auto c1 = coefficient_by_tableaux(P({1, 1, 0}), P({3, 2, 0}), nu);
    auto c2 = coefficient_by_tableaux(P({3, 2, 0}), P({1, 1, 0}), nu);
    CHECK(c1 == (y(6) - y(1)) + (y(4) - y(2)));
    CHECK(c2 == (y(6) - y(2)) + (y(4) - y(1)));
}

TEST_CASE("the 8-term and 6-term expressions") {
    auto l = P({2, 1, 0}), m = P({3, 3, 1});
    FactorLists eight{{yf(5, 3), yf(5, 1), yf(3, 1)}, {yf(6, 4), yf(5, 1), yf(3, 1)}, {yf(6, 4), yf(6, 3), yf(3, 1)},
                      {yf(5, 3), yf(4, 3), yf(5, 1)}, {yf(6, 4), yf(4, 3), yf(5, 1)}, {yf(6, 4), yf(6, 3), yf(4, 3)},
                      {yf(6, 4), yf(5, 4), yf(5, 1)}, {yf(6, 4), yf(5, 4), yf(6, 3)}};
    FactorLists six{{yf(6, 4), yf(6, 2), yf(5, 2)}, {yf(5, 3), yf(6, 2), yf(5, 2)}, {yf(6, 4), yf(6, 2), yf(2, 1)},
                    {yf(5, 3), yf(6, 2), yf(2, 1)}, {yf(6, 4), yf(5, 1), yf(2, 1)}, {yf(5, 3), yf(5, 1), yf(2, 1)}};
    FactorLists other{{yf(6, 1), yf(6, 3), yf(5, 1)}, {yf(6, 1), yf(5, 4), yf(5, 1)}};
    CHECK(positive_lists(l, m, m) == normalized(eight));
    CHECK(positive_lists(m, l, m) == normalized(six));
    auto c = coefficient_by_tableaux(l, m, m);
    CHECK(c == expand(eight));
    CHECK(c == expand(six));
    CHECK(c == expand(other));
    CHECK(coefficient_by_tableaux(m, l, m) == c);
}

TEST_CASE("positivity criteria agree with the sign of every factor") {
    for (const auto& l : core::partitions_inside(P({2, 2, 1})))
        for (const auto& m : core::partitions_inside(P({3, 2, 0})))
            for (const auto& L : tableaux::enumerate_lr_tableaux_all(l, m, Partition::zero(3))) {
                auto w = weight_c_L(L);
                bool direct = std::all_of(w.factors.begin(), w.factors.end(), [](auto& f) { return f.e > f.f; });
                for (auto c : all_criteria) CHECK(is_positive(L, c) == direct);
                CHECK(direct == !w.poly.is_zero());
            }
}

TEST_CASE("non-Yamanouchi input is rejected") {
    auto shape = tableaux::make_shape(P({1, 0}));
    SkewBarredTableau L{P({0, 0}), {shape, {{2, false}}}};
    CHECK_THROWS_AS(is_positive(L, Criterion::C1), DomainError);
}

TEST_CASE("C_L is the specialization of c_L, term by term") {
    int n = 6;
    for (const auto& l : core::partitions_in_box(3, 3))
        for (const auto& m : core::partitions_inside(P({2, 1, 1})))
            for (const auto& L : tableaux::enumerate_lr_tableaux_all(l, m, Partition::zero(3))) {
                Partition nu(std::vector<int>(tableaux::unbarred_content(L).entries()));
                if (!nu.in_box(n)) continue;
                CHECK(weight_C_L(L, n).poly == polyring::specialize_y_to_Y(weight_c_L(L).poly, n));
            }
}

TEST_CASE("degree is |lambda|+|mu|-|nu|") {
    auto l = P({2, 1, 0}), m = P({2, 2, 0});
    for (const auto& [nu, c] : coefficient_table_by_tableaux(l, m)) CHECK(c.total_degree() == l.size() + m.size() - nu.size());
}

TEST_CASE("rendered sums for the n=4 instance") {
    auto l = P({1, 1}), m = P({2, 1});
    std::vector<Weight> wy, wY;
    for (const auto& L : tableaux::enumerate_lr_tableaux(l, m, m)) {
        wy.push_back(weight_c_L(L));
        wY.push_back(weight_C_L(L, 4));
    }
    CHECK(render_sum(wy, Family::y) == "(y4-y3)(y2-y1)+(y3-y1)(y2-y1)");
    CHECK(render_sum(wY, Family::Y) == "(Y2-Y1)(Y4-Y3)+(Y4-Y2)(Y4-Y3)");
    CHECK(coefficient_by_tableaux_Y(l, m, m, 4) == (Y(2) - Y(1)) * (Y(4) - Y(3)) + (Y(4) - Y(2)) * (Y(4) - Y(3)));
}

TEST_CASE("shapes outside P_{d,n} are rejected") {
    CHECK_THROWS_AS(require_in_box(P({3, 0}), 4, "lambda"), DomainError);
    CHECK_NOTHROW(require_in_box(P({2, 0}), 4, "lambda"));
}
