#include "doctest.h"
#include "eqlr/schur.hpp"
#include "support.hpp"

using namespace eqlr;
using namespace eqlr::schur;
using namespace testing;

TEST_CASE("factorial Schur at y = 0 is the ordinary Schur polynomial") {
    auto zero_y = [](polyring::Family f, int i) { return f == Family::x ? x(i) : MPoly(); };
    for (int d = 1; d <= 3; ++d)
        for (const auto& mu : core::partitions_in_box(d, 3))
            CHECK(polyring::substitute(factorial_schur(mu, d), zero_y) == schur_ssyt(mu));
}

TEST_CASE("single-box factorial Schur") {
    // s_(1)(x|y) in two variables: (x1 - y_2) + (x2 - y_1)
    CHECK(factorial_schur(P({1, 0}), 2) == x(1) - y(2) + x(2) - y(1));
}

TEST_CASE("factorial Schur is symmetric in x") {
    for (const auto& mu : core::partitions_in_box(3, 2)) {
        auto s = factorial_schur(mu, 3);
        auto swap12 = [](polyring::Family f, int i) {
            return f == Family::x && i <= 2 ? x(3 - i) : MPoly::var(f, i);
        };
        CHECK(polyring::substitute(s, swap12) == s);
    }
}

TEST_CASE("bialternant identity") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& mu : core::partitions_inside(P(std::vector<int>(static_cast<size_t>(d), 2))))
            CHECK(verify_bialternant(mu, d));
}

TEST_CASE("oracle expansion rebuilds the product and matches the tableau rule") {
    for (const auto& l : core::partitions_inside(P({2, 1, 0})))
        for (const auto& m : core::partitions_inside(P({2, 1, 1}))) {
            auto table = expand_product_oracle(l, m, 3);
            CHECK(rebuild_from_table(table, 3) == factorial_schur(l, 3) * factorial_schur(m, 3));
            CHECK(table == weights::coefficient_table_by_tableaux(l, m));
        }
}

TEST_CASE("oracle value for the small example") {
    auto table = expand_product_oracle(P({1, 1, 0}), P({3, 2, 0}), 3);
    CHECK(table.at(P({3, 2, 1})) == (y(6) - y(1)) + (y(4) - y(2)));
}

TEST_CASE("product-alternant and induction lemmas on small inputs") {
    CHECK(verify_lemma_product_alternant(P({1, 0}), P({2, 1}), 2));
    CHECK(verify_lemma_product_alternant(P({1, 1, 0}), P({1, 1, 0}), 3));
    for (const auto& R : tableaux::enumerate_reverse_tableaux(P({2, 1}), 2))
        CHECK(verify_lemma_induction(R, core::Composition({1, 0})));
}

TEST_CASE("bad guys cancel") {
    auto rep = verify_bad_guys_vanish(P({1, 0, 0}), P({2, 1, 0}), 3);
    CHECK(rep.bad_guys > 0);
    CHECK(rep.ok());
}

TEST_CASE("skew shapes: the tableau rule equals the oracle") {
    for (const auto& mu : core::partitions_inside(P({3, 2, 1})))
        for (const auto& kappa : core::partitions_inside(mu)) {
            if (kappa.size() == 0) continue;
            for (const auto& l : core::partitions_inside(P({2, 1, 0}))) {
                auto table = expand_product_oracle(l, mu, kappa, 3);
                CHECK(table == weights::coefficient_table_by_tableaux(l, mu, kappa));
                CHECK(rebuild_from_table(table, 3) == factorial_schur(l, 3) * factorial_schur(mu, kappa, 3));
            }
        }
}
