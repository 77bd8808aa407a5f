// Acceptance run: one PASS/FAIL line per criterion 1..8.
// Usage: acceptance [criterion ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "eqlr/puzzles.hpp"
#include "eqlr/weights.hpp"
#include "json.hpp"
#include "verify.hpp"

using namespace eqlr;
using core::Partition;
using polyring::Family;
using polyring::MPoly;
using weights::WeightFactor;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
    bool ok = true;
    std::vector<std::string> notes;
    double seconds = 0;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
MPoly y(int i) { return MPoly::y(i); }
MPoly Y(int i) { return MPoly::Y(i); }

using Lists = std::vector<std::vector<WeightFactor>>;

Lists normalized(Lists v) {
    for (auto& f : v) std::sort(f.begin(), f.end());
    std::sort(v.begin(), v.end());
    return v;
}

MPoly expand(const Lists& v) {
    MPoly total;
    for (const auto& fs : v) {
        MPoly t{1};
        for (const auto& f : fs) t *= f.poly();
        total += t;
    }
    return total;
}

WeightFactor yf(int e, int f) { return {Family::y, e, f}; }
WeightFactor Yf(int e, int f) { return {Family::Y, e, f}; }

Lists positive_lists(const Partition& l, const Partition& m, const Partition& nu) {
    Lists out;
    for (const auto& L : tableaux::enumerate_lr_tableaux(l, m, nu))
        if (weights::is_positive(L, weights::Criterion::C1)) out.push_back(weights::weight_c_L(L).factors);
    return normalized(out);
}

// Runs a sub-check, which must also finish within `budget` seconds.
void timed(Result& r, const std::string& name, double budget, const std::function<bool()>& f) {
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        r.require(false, name + ": " + e.what());
        return;
    }
    double s = since(t0);
    r.require(ok, name + ": wrong value");
    r.require(s < budget, name + ": took " + std::to_string(s) + " s");
}

Result criterion1() {
    Result r;
    timed(r, "small example", 1.0, [] {
        auto nu = P({3, 2, 1});
        auto a = weights::coefficient_by_tableaux(P({1, 1, 0}), P({3, 2, 0}), nu);
        auto b = weights::coefficient_by_tableaux(P({3, 2, 0}), P({1, 1, 0}), nu);
        return a == (y(6) - y(1)) + (y(4) - y(2)) && b == (y(6) - y(2)) + (y(4) - y(1)) && a == b;
    });
    timed(r, "8-term and 6-term expressions", 1.0, [] {
        auto l = P({2, 1, 0}), m = P({3, 3, 1});
        Lists eight{{yf(5, 3), yf(5, 1), yf(3, 1)}, {yf(6, 4), yf(5, 1), yf(3, 1)}, {yf(6, 4), yf(6, 3), yf(3, 1)},
                    {yf(5, 3), yf(4, 3), yf(5, 1)}, {yf(6, 4), yf(4, 3), yf(5, 1)}, {yf(6, 4), yf(6, 3), yf(4, 3)},
                    {yf(6, 4), yf(5, 4), yf(5, 1)}, {yf(6, 4), yf(5, 4), yf(6, 3)}};
        Lists six{{yf(6, 4), yf(6, 2), yf(5, 2)}, {yf(5, 3), yf(6, 2), yf(5, 2)}, {yf(6, 4), yf(6, 2), yf(2, 1)},
                  {yf(5, 3), yf(6, 2), yf(2, 1)}, {yf(6, 4), yf(5, 1), yf(2, 1)}, {yf(5, 3), yf(5, 1), yf(2, 1)}};
        return positive_lists(l, m, m) == normalized(eight) && positive_lists(m, l, m) == normalized(six) &&
               expand(eight) == expand(six) && weights::coefficient_by_tableaux(l, m, m) == expand(eight);
    });
    timed(r, "n=9 figure weight", 1.0, [] {
        std::ifstream f(std::string(EQLR_TEST_DATA_DIR) + "/fig9_edges.json");
        auto j = nlohmann::json::parse(f);
        std::vector<std::tuple<puzzles::Edge, int>> edges;
        for (const auto& e : j) {
            std::string d = e[0];
            auto dir = d == "H" ? puzzles::EdgeDir::H : d == "/" ? puzzles::EdgeDir::NE : puzzles::EdgeDir::NW;
            edges.push_back({{dir, e[1].get<int>(), e[2].get<int>()}, e[3].get<int>()});
        }
        int hits = 0;
        bool ok = true;
        for (const auto& p : puzzles::enumerate_puzzles(P({4, 2, 2}), P({4, 3, 1}), P({6, 5, 2}), 9)) {
            bool match = true;
            for (const auto& [e, v] : edges) match = match && p.label(e) == v;
            if (!match) continue;
            ++hits;
            ok = ok && normalized({puzzles::puzzle_weight(p).factors}) == normalized({{yf(8, 3), yf(3, 2), yf(3, 1)}}) &&
                 normalized({puzzles::puzzle_weight(p, Family::Y).factors}) ==
                     normalized({{Yf(7, 2), Yf(8, 7), Yf(9, 7)}});
        }
        return ok && hits == 1;
    });
    timed(r, "n=4 totals in both flavors", 1.0, [] {
        auto l = P({1, 1}), m = P({2, 1});
        MPoly cy = (y(4) - y(3)) * (y(2) - y(1)) + (y(3) - y(1)) * (y(2) - y(1));
        MPoly cY = (Y(2) - Y(1)) * (Y(4) - Y(3)) + (Y(4) - Y(2)) * (Y(4) - Y(3));
        std::vector<weights::Weight> wy, wY;
        for (const auto& p : puzzles::enumerate_puzzles(l, m, m, 4)) {
            wy.push_back(puzzles::puzzle_weight(p));
            wY.push_back(puzzles::puzzle_weight(p, Family::Y));
        }
        return puzzles::coefficient_by_puzzles(l, m, m, 4) == cy &&
               puzzles::coefficient_by_puzzles(l, m, m, 4, Family::Y) == cY &&
               weights::coefficient_by_tableaux(l, m, m) == cy && weights::coefficient_by_tableaux_Y(l, m, m, 4) == cY &&
               weights::render_sum(wy, Family::y) == "(y4-y3)(y2-y1)+(y3-y1)(y2-y1)" &&
               weights::render_sum(wY, Family::Y) == "(Y2-Y1)(Y4-Y3)+(Y4-Y2)(Y4-Y3)";
    });
    return r;
}

// Failing cases of a report, restricted by id prefix.
void absorb(Result& r, const verify::SuiteReport& rep, const std::string& prefix = "") {
    std::size_t shown = 0;
    for (const auto& c : rep.cases) {
        if (c.id.rfind(prefix, 0) != 0 || c.ok) continue;
        r.ok = false;
        if (shown++ < 5) r.notes.push_back(rep.suite + " " + c.id + ": " + c.detail);
    }
}

std::size_t count_containing(const verify::SuiteReport& rep, const std::string& prefix) {
    std::size_t k = 0;
    for (const auto& c : rep.cases) k += c.id.find(prefix) != std::string::npos;
    return k;
}

struct Reports {
    std::map<std::string, verify::SuiteReport> cache;
    std::map<std::string, double> seconds;

    const verify::SuiteReport& get(const std::string& key, const std::string& suite, verify::Options opt) {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto t0 = Clock::now();
        auto rep = verify::run_suite(suite, opt);
        seconds[key] = since(t0);
        return cache.emplace(key, std::move(rep)).first->second;
    }
};

verify::Options with(int d, int n = 0) {
    verify::Options o;
    o.d = d;
    o.n = n;
    return o;
}

void budget(Result& r, double s, double limit) {
    r.seconds = s;
    r.require(s < limit, "took " + std::to_string(s) + " s, budget " + std::to_string(limit) + " s");
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int k = 1; k < argc; ++k) wanted.insert(std::stoi(argv[k]));
    if (wanted.empty())
        for (int k = 1; k <= 8; ++k) wanted.insert(k);

    const std::map<int, std::string> titles{
        {1, "worked-example regression"},
        {2, "tableau rule equals the product-expansion oracle, lambda, mu in (3,3,3)"},
        {3, "puzzle rule equals tableau rule in P_{2,n<=5} and P_{3,6}; trapezoid sums agree"},
        {4, "bialternant identity, mu in (3,3,3), d <= 3"},
        {5, "product-alternant, induction and Bad-Guy lemmas"},
        {6, "involutions s_i, properties (i)-(vi), Bender-Knuth recovery"},
        {7, "bijection Phi: round trips, counts, factor lists"},
        {8, "positivity criteria, e > f, degree"},
    };

    Reports reps;
    bool all_ok = true;
    for (int k : wanted) {
        Result r;
        auto t0 = Clock::now();
        try {
            switch (k) {
                case 1:
                    r = criterion1();
                    r.seconds = since(t0);
                    break;
                case 2: {
                    const auto& rep = reps.get("lra", "lra", with(3));
                    absorb(r, rep, "rule");
                    r.require(count_containing(rep, "rule d=3") == 400, "expected 400 ordered pairs");
                    budget(r, reps.seconds["lra"], 300);
                    break;
                }
                case 3: {
                    const auto& two = reps.get("bij2", "bijection", with(2, 5));
                    const auto& three = reps.get("bij3", "bijection", with(3, 6));
                    absorb(r, two);
                    absorb(r, three);
                    r.require(count_containing(three, "n=6 ") > 0, "no P_{3,6} cases ran");
                    budget(r, reps.seconds["bij2"] + reps.seconds["bij3"], 600);
                    break;
                }
                case 4: {
                    const auto& rep = reps.get("bialternant", "bialternant", with(3));
                    absorb(r, rep);
                    budget(r, reps.seconds["bialternant"], 60);
                    break;
                }
                case 5: {
                    const auto& lra = reps.get("lra", "lra", with(3));
                    const auto& ind = reps.get("induction", "induction", with(3));
                    const auto& bad = reps.get("badguys", "badguys", with(3));
                    absorb(r, lra, "lemma");
                    absorb(r, ind);
                    absorb(r, bad);
                    r.require(count_containing(ind, "random") == 200, "expected 200 random induction cases");
                    r.require(count_containing(lra, "lemma") > 0, "no product-alternant cases ran");
                    budget(r, reps.seconds["lra"] + reps.seconds["induction"] + reps.seconds["badguys"], 300);
                    break;
                }
                case 6: {
                    const auto& rep = reps.get("involutions", "involutions", with(3));
                    absorb(r, rep);
                    budget(r, reps.seconds["involutions"], 300);
                    break;
                }
                case 7: {
                    const auto& rep = reps.get("bij2", "bijection", with(2, 5));
                    absorb(r, rep);
                    for (const char* fig : {"n=4 lambda=(1,1) mu=(2,1) nu=(2,1)", "n=9 lambda=(4,2,2) mu=(4,3,1) nu=(6,5,2)",
                                            "n=13 lambda=(5,2,1) mu=(8,5,1) nu=(9,4,2)"})
                        r.require(count_containing(rep, fig) > 0, std::string("missing figure instance ") + fig);
                    budget(r, reps.seconds["bij2"], 600);
                    break;
                }
                case 8: {
                    const auto& rep = reps.get("positivity", "positivity", with(3));
                    absorb(r, rep);
                    budget(r, reps.seconds["positivity"], 300);
                    break;
                }
                default:
                    r.require(false, "no such criterion");
            }
        } catch (const std::exception& e) {
            r.require(false, e.what());
        }
        all_ok = all_ok && r.ok;
        auto title = titles.count(k) ? titles.at(k) : std::string("?");
        std::printf("criterion %d: %s (%.2f s) %s\n", k, r.ok ? "PASS" : "FAIL", r.seconds, title.c_str());
        for (const auto& n : r.notes) std::printf("    %s\n", n.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
