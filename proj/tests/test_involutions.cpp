#include <sstream>

#include "doctest.h"
#include "eqlr/involutions.hpp"
#include "support.hpp"
#include "verify.hpp"

using namespace eqlr;
using namespace eqlr::involutions;
using namespace testing;

namespace {

// One-row hatted tableau from "2 ^2 v2 3", written left to right.
HattedTableau row(const std::string& text, int d) {
    std::istringstream in(text);
    std::vector<HEntry> left_to_right;
    for (std::string tok; in >> tok;) {
        Hat h = tok[0] == 'v' ? Hat::left : tok[0] == '^' ? Hat::right : Hat::none;
        left_to_right.push_back({std::stoi(h == Hat::none ? tok : tok.substr(1)), h});
    }
    std::vector<int> mu(static_cast<size_t>(d), 0);
    mu[0] = static_cast<int>(left_to_right.size());
    return {tableaux::make_shape(Partition(mu)), {left_to_right.rbegin(), left_to_right.rend()}};
}

}  // namespace

TEST_CASE("worked string example for i = 2") {
    auto H = row("2 ^2 v2 2 2 v2 ^2 2 3 v3 ^3 v3", 3);
    REQUIRE(H.is_valid());
    auto r = apply_s_i(H, 2);
    CHECK(r.tableau.str() == row("2 ^2 v2 v2 3 ^3 v3 3 3 v3 ^3 3", 3).str());
    CHECK(apply_s_i(r.tableau, 2).tableau == H);
    // the rightmost v3 goes to the fourth entry from the left, a v2
    int rightmost = 0;
    int fourth = 12 - 4;
    CHECK(r.map.b_l.at(rightmost) == fourth);
}

TEST_CASE("prefix content is transported only in the moved coordinate") {
    auto H = row("v1 1 2", 3);
    auto r = apply_s_i(H, 1);
    CHECK(r.tableau.str() == "1 v2 2");
    int a = 2;  // the v1, read last
    int b = r.map.b_l.at(a);
    auto before_H = core::content(H.unhatted_word_before(a), 3);
    auto before_T = core::content(r.tableau.unhatted_word_before(b), 3);
    CHECK(before_H == core::Composition({1, 1, 0}));
    CHECK(before_T == core::Composition({0, 1, 0}));
    CHECK_FALSE(before_T == before_H.swapped(1));
    CHECK(before_T[1] == before_H.swapped(1)[1]);
    core::Composition xi({1, 2, 3});
    CHECK(e_index(xi.swapped(1), r.tableau, b) == e_index(xi, H, a));
    CHECK(verify::s_i_failures(H, 1, xi).empty());
}

TEST_CASE("s_i is an involution with the six properties, exhaustively for small shapes") {
    for (int d = 2; d <= 3; ++d)
        for (const auto& mu : core::partitions_inside(P(d == 2 ? std::vector<int>{2, 2} : std::vector<int>{2, 1, 0})))
            for (const auto& H : enumerate_hatted(mu, d))
                for (int i = 1; i < d; ++i) {
                    std::vector<int> xi;
                    for (int k = 1; k <= d; ++k) xi.push_back(k);
                    auto bad = verify::s_i_failures(H, i, core::Composition(xi));
                    CHECK_MESSAGE(bad.empty(), H.str());
                }
}

TEST_CASE("hat-free tableaux follow Bender-Knuth") {
    for (const auto& mu : core::partitions_inside(P({3, 2, 0})))
        for (const auto& T : tableaux::enumerate_reverse_tableaux(mu, 3))
            for (int i = 1; i <= 2; ++i) {
                HattedTableau H{T.shape, {}};
                for (const auto& e : T.entries) H.entries.push_back({e.value, Hat::none});
                auto s = apply_s_i(H, i).tableau.bar_projection();
                auto bk = verify::bender_knuth(T, i);
                CHECK(s == bk);
                CHECK(core::content(bk.unbarred_word(), 3) == core::content(T.unbarred_word(), 3).swapped(i));
            }
}

TEST_CASE("splitting each bar into two hats expands c_{xi,B}") {
    core::Composition xi({2, 1, 3});
    for (const auto& B : tableaux::enumerate_barred_tableaux(P({2, 1, 0}), 3)) {
        MPoly total;
        for (const auto& H : hattings(B)) total += weight_d_xi_H(xi, H);
        CHECK(total == weights::weight_c_xi_B(xi, B).poly);
    }
}

TEST_CASE("entry classes") {
    auto H = row("1 v1 2 ^2", 2);
    auto cls = classify(H, 1);
    for (auto c : cls) CHECK(c == EntryClass::free);
}

TEST_CASE("sigma words of a reduced pair agree on content") {
    for (const auto& H : enumerate_hatted(P({2, 1, 0}), 3)) {
        auto a = apply_sigma({1, 2, 1}, H);
        auto b = apply_sigma({2, 1, 2}, H);
        CHECK(a.unhatted_content() == b.unhatted_content());
        CHECK(apply_sigma({1, 1}, H) == H);
    }
}

TEST_CASE("bad guy star is an involution on bad guys") {
    auto lambda = P({1, 0, 0});
    for (const auto& H : enumerate_hatted(P({2, 1, 0}), 3)) {
        auto star = bad_guy_star(H, lambda);
        CHECK(star.has_value() == is_bad_guy(H, lambda));
        if (star) {
            CHECK(is_bad_guy(*star, lambda));
            CHECK(bad_guy_star(*star, lambda) == H);
        }
    }
}
