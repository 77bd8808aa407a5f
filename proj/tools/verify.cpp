#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "eqlr/involutions.hpp"
#include "eqlr/parallel.hpp"
#include "eqlr/puzzles.hpp"
#include "eqlr/schur.hpp"
#include "eqlr/tableaux.hpp"
#include "eqlr/weights.hpp"

namespace eqlr::verify {

using core::Composition;
using involutions::Hat;
using involutions::HattedTableau;
using polyring::Family;
using polyring::MPoly;
using tableaux::BarredTableau;
using tableaux::SkewBarredTableau;

std::size_t SuiteReport::failures() const {
    return static_cast<size_t>(std::count_if(cases.begin(), cases.end(), [](const Case& c) { return !c.ok; }));
}

namespace {

std::string paren(const Partition& p) { return "(" + p.str() + ")"; }

Partition box(std::vector<int> parts, int d) {
    parts.resize(static_cast<size_t>(d), 0);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::vector<int> shape_or(const Options& opt, std::vector<int> fallback) {
    return opt.max_shape.empty() ? fallback : opt.max_shape;
}

// Runs each case body in parallel; exceptions become failed cases.
template <class T>
std::vector<Case> run_cases(const std::vector<T>& items, const std::function<Case(const T&)>& body,
                            const std::function<std::string(const T&)>& id) {
    return parallel::parallel_map<Case>(items.size(), [&](std::size_t k) {
        try {
            return body(items[k]);
        } catch (const InvariantError& e) {
            return Case{id(items[k]), false, std::string("invariant: ") + e.what()};
        } catch (const std::exception& e) {
            return Case{id(items[k]), false, std::string("error: ") + e.what()};
        }
    });
}

std::vector<Composition> compositions(int d, int lo, int hi) {
    std::vector<Composition> out;
    std::vector<int> v(static_cast<size_t>(d), lo);
    for (;;) {
        out.emplace_back(v);
        int k = d - 1;
        while (k >= 0 && v[static_cast<size_t>(k)] == hi) v[static_cast<size_t>(k--)] = lo;
        if (k < 0) break;
        ++v[static_cast<size_t>(k)];
    }
    return out;
}

Composition apply_word(const std::vector<int>& word, Composition c) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) c = c.swapped(*it);
    return c;
}

std::string key(const SkewBarredTableau& L) { return L.lambda.str() + "|" + tableaux::render_inline(L.inner); }

}  // namespace

std::vector<std::string> s_i_failures(const HattedTableau& H, int i, const Composition& xi) {
    std::vector<std::string> bad;
    auto fail = [&](const char* what) {
        if (std::find(bad.begin(), bad.end(), what) == bad.end()) bad.emplace_back(what);
    };
    auto [T, m] = involutions::apply_s_i(H, i);
    if (!(*T.shape == *H.shape) || !T.is_valid()) {
        fail("valid");
        return bad;
    }
    if (!(involutions::apply_s_i(T, i).tableau == H)) fail("involution");

    auto sigma = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
    auto hats = [](const HattedTableau& X, Hat h) {
        std::set<int> s;
        for (int k = 0; k < X.shape->size(); ++k)
            if (X[k].hat == h) s.insert(k);
        return s;
    };
    auto image_ok = [&](const std::map<int, int>& f, Hat h) {
        std::set<int> dom, img;
        for (auto [a, b] : f) {
            dom.insert(a);
            img.insert(b);
        }
        return dom == hats(H, h) && img == hats(T, h) && img.size() == f.size();
    };
    if (!image_ok(m.b_l, Hat::left) || !image_ok(m.b_r, Hat::right)) fail("maps");

    if (!(T.unhatted_content() == H.unhatted_content().swapped(i))) fail("ii");
    int d = H.d();
    Composition sxi = xi.swapped(i);
    for (auto [a, b] : m.b_l) {
        if (T[b].value != sigma(H[a].value)) fail("i");
        auto before_T = core::content(T.unhatted_word_before(b), d);
        auto before_H = core::content(H.unhatted_word_before(a), d);
        // Only the |b_l(a)| coordinate transports; the full vector can differ (row v1 1 2, i = 1).
        int v = T[b].value;
        if (before_T[v - 1] != before_H.swapped(i)[v - 1]) fail("iii");
        if (involutions::e_index(sxi, T, b) != involutions::e_index(xi, H, a)) fail("iv");
    }
    for (auto [a, b] : m.b_r)
        if (involutions::f_index(T, b) != involutions::f_index(H, a)) fail("v");
    if (!(involutions::weight_d_xi_H(sxi, T) == involutions::weight_d_xi_H(xi, H))) fail("vi");
    return bad;
}

BarredTableau bender_knuth(const BarredTableau& T, int i) {
    const auto& sh = *T.shape;
    BarredTableau out = T;
    for (int r = 1; r <= sh.d(); ++r) {
        std::vector<int> free_cells;  // left to right
        int low = 0;
        for (int c = sh.mu()[r - 1]; c > sh.kappa()[r - 1]; --c) {
            int v = T.at(r, c).value;
            if (v == i) {
                if (sh.contains(r - 1, c) && T.at(r - 1, c).value == i + 1) continue;
                ++low;
            } else if (v == i + 1) {
                if (sh.contains(r + 1, c) && T.at(r + 1, c).value == i) continue;
            } else {
                continue;
            }
            free_cells.push_back(sh.index(r, c));
        }
        int high = static_cast<int>(free_cells.size()) - low;
        for (size_t k = 0; k < free_cells.size(); ++k)
            out.entries[static_cast<size_t>(free_cells[k])].value = static_cast<int>(k) < high ? i : i + 1;
    }
    return out;
}

SuiteReport suite_bialternant(const Options& opt) {
    std::vector<std::pair<int, Partition>> items;
    for (int d = 1; d <= opt.d; ++d)
        for (const auto& mu : core::partitions_inside(box(shape_or(opt, {3, 3, 3}), d))) items.push_back({d, mu});
    using Item = std::pair<int, Partition>;
    auto id = [](const Item& it) { return "d=" + std::to_string(it.first) + " mu=" + paren(it.second); };
    return {"bialternant", run_cases<Item>(
                               items,
                               [&](const Item& it) {
                                   bool ok = schur::verify_bialternant(it.second, it.first);
                                   return Case{id(it), ok, ok ? "" : "a_rho s_mu != a_{mu+rho}"};
                               },
                               id)};
}

SuiteReport suite_lra(const Options& opt) {
    int d = opt.d;
    struct Item {
        Partition lambda, mu;
        int d;
        bool lemma;
    };
    std::vector<Item> items;
    auto shapes = core::partitions_inside(box(shape_or(opt, {3, 3, 3}), d));
    for (const auto& l : shapes)
        for (const auto& m : shapes) items.push_back({l, m, d, false});
    for (int e = 1; e <= d; ++e) {
        auto small = core::partitions_inside(box({2, 2, 2}, e));
        for (const auto& l : small)
            for (const auto& m : small) items.push_back({l, m, e, true});
    }
    auto id = [](const Item& it) {
        return std::string(it.lemma ? "lemma" : "rule") + " d=" + std::to_string(it.d) + " lambda=" + paren(it.lambda) +
               " mu=" + paren(it.mu);
    };
    return {"lra", run_cases<Item>(
                       items,
                       [&](const Item& it) {
                           if (it.lemma) {
                               bool ok = schur::verify_lemma_product_alternant(it.lambda, it.mu, it.d);
                               return Case{id(it), ok, ok ? "" : "product-alternant identity fails"};
                           }
                           auto rule = weights::coefficient_table_by_tableaux(it.lambda, it.mu);
                           auto oracle = schur::expand_product_oracle(it.lambda, it.mu, it.d);
                           if (rule != oracle) return Case{id(it), false, "tableau rule differs from the oracle"};
                           return Case{id(it), true, std::to_string(rule.size()) + " nonzero nu"};
                       },
                       id)};
}

SuiteReport suite_induction(const Options& opt) {
    struct Item {
        BarredTableau R;
        Composition xi;
        std::string id;
    };
    std::vector<Item> items;
    // Any filling with values 0..d (0 = empty box); no row or column conditions.
    auto fillings = [](const Partition& mu, int d, const std::function<void(BarredTableau)>& emit) {
        auto shape = tableaux::make_shape(mu);
        BarredTableau R{shape, std::vector<tableaux::Entry>(static_cast<size_t>(shape->size()))};
        std::function<void(int)> rec = [&](int k) {
            if (k == shape->size()) {
                emit(R);
                return;
            }
            for (int v = 0; v <= d; ++v) {
                R.entries[static_cast<size_t>(k)].value = v;
                rec(k + 1);
            }
        };
        rec(0);
    };
    int small_d = std::min(opt.d, 2);
    for (int d = 1; d <= small_d; ++d) {
        for (const auto& mu : core::partitions_inside(box({2, 2}, d))) {
            if (mu.size() == 0) continue;
            fillings(mu, d, [&](BarredTableau R) {
                for (const auto& xi : compositions(d, 0, 2))
                    items.push_back({R, xi, "d=" + std::to_string(d) + " R=" + tableaux::render_inline(R) +
                                                " xi=" + xi.str()});
            });
        }
    }
    std::mt19937_64 rng(opt.seed);
    int d = std::max(opt.d, 1);
    auto shapes = core::partitions_inside(box({3, 2, 1}, d));
    shapes.erase(std::remove_if(shapes.begin(), shapes.end(), [](const Partition& p) { return p.size() == 0; }),
                 shapes.end());
    for (int t = 0; t < opt.random_cases && !shapes.empty(); ++t) {
        const auto& mu = shapes[std::uniform_int_distribution<size_t>(0, shapes.size() - 1)(rng)];
        auto shape = tableaux::make_shape(mu);
        BarredTableau R{shape, std::vector<tableaux::Entry>(static_cast<size_t>(shape->size()))};
        for (int k = 0; k < shape->size(); ++k)
            R.entries[static_cast<size_t>(k)].value =
                std::uniform_int_distribution<int>(0, d)(rng);
        std::vector<int> xi(static_cast<size_t>(d));
        for (auto& x : xi) x = std::uniform_int_distribution<int>(0, 3)(rng);
        items.push_back({R, Composition(xi), "random " + std::to_string(t) + " R=" + tableaux::render_inline(R) +
                                                 " xi=" + Composition(xi).str()});
    }
    auto id = [](const Item& it) { return it.id; };
    return {"induction", run_cases<Item>(
                             items,
                             [&](const Item& it) {
                                 bool ok = schur::verify_lemma_induction(it.R, it.xi);
                                 return Case{it.id, ok, ok ? "" : "induction identity fails"};
                             },
                             id)};
}

SuiteReport suite_badguys(const Options& opt) {
    struct Item {
        Partition lambda, mu;
        int d;
    };
    std::vector<Item> items;
    for (int d = 1; d <= opt.d; ++d)
        for (const auto& mu : core::partitions_inside(box({2, 2}, d)))
            for (const auto& l : core::partitions_inside(box(shape_or(opt, {3, 3, 3}), d))) items.push_back({l, mu, d});
    auto id = [](const Item& it) {
        return "d=" + std::to_string(it.d) + " lambda=" + paren(it.lambda) + " mu=" + paren(it.mu);
    };
    return {"badguys", run_cases<Item>(
                           items,
                           [&](const Item& it) {
                               auto rep = schur::verify_bad_guys_vanish(it.lambda, it.mu, it.d);
                               std::string detail = std::to_string(rep.bad_guys) + " bad guys of " +
                                                    std::to_string(rep.hatted) + ", " +
                                                    std::to_string(rep.fixed_points) + " fixed";
                               if (!rep.sum_is_zero) detail += "; sum is not zero";
                               if (!rep.pairing_ok) detail += "; pairing fails";
                               return Case{id(it), rep.ok(), detail};
                           },
                           id)};
}

SuiteReport suite_involutions(const Options& opt) {
    struct Item {
        Partition mu;
        int d;
    };
    std::vector<Item> items;
    for (int d = 2; d <= opt.d; ++d)
        for (const auto& mu : core::partitions_inside(box(shape_or(opt, {3, 2}), d))) items.push_back({mu, d});
    auto id = [](const Item& it) { return "d=" + std::to_string(it.d) + " mu=" + paren(it.mu); };
    return {"involutions", run_cases<Item>(
                               items,
                               [&](const Item& it) {
                                   int d = it.d;
                                   auto xis = compositions(d, 1, 3);
                                   std::vector<std::vector<int>> words{{}};
                                   for (int len = 1; len <= 4; ++len) {
                                       std::vector<std::vector<int>> next;
                                       for (const auto& w : words)
                                           if (static_cast<int>(w.size()) == len - 1)
                                               for (int i = 1; i < d; ++i) {
                                                   auto v = w;
                                                   v.push_back(i);
                                                   next.push_back(v);
                                               }
                                       words.insert(words.end(), next.begin(), next.end());
                                   }
                                   std::size_t count = 0, bk = 0;
                                   for (const auto& H : involutions::enumerate_hatted(it.mu, d)) {
                                       ++count;
                                       bool hat_free = std::all_of(H.entries.begin(), H.entries.end(),
                                                                   [](const auto& e) { return e.hat == Hat::none; });
                                       for (int i = 1; i < d; ++i) {
                                           for (const auto& xi : xis) {
                                               auto bad = s_i_failures(H, i, xi);
                                               if (!bad.empty())
                                                   return Case{id(it), false,
                                                               "s_" + std::to_string(i) + " on " + H.str() +
                                                                   " xi=" + xi.str() + " violates " + bad.front()};
                                           }
                                           if (hat_free) {
                                               ++bk;
                                               auto s = involutions::apply_s_i(H, i).tableau.bar_projection();
                                               if (!(s == bender_knuth(H.bar_projection(), i)))
                                                   return Case{id(it), false,
                                                               "s_" + std::to_string(i) + " differs from Bender-Knuth on " +
                                                                   H.str()};
                                           }
                                       }
                                       for (const auto& w : words) {
                                           auto S = involutions::apply_sigma(w, H);
                                           bool ok = S.is_valid() &&
                                                     S.unhatted_content() == apply_word(w, H.unhatted_content());
                                           for (size_t k = 0; ok && k < xis.size(); k += 7)
                                               ok = involutions::weight_d_xi_H(apply_word(w, xis[k]), S) ==
                                                    involutions::weight_d_xi_H(xis[k], H);
                                           if (!ok) {
                                               std::string ws;
                                               for (int x : w) ws += std::to_string(x);
                                               return Case{id(it), false, "word " + ws + " on " + H.str()};
                                           }
                                       }
                                   }
                                   return Case{id(it), true,
                                               std::to_string(count) + " hatted, " + std::to_string(bk) +
                                                   " Bender-Knuth checks"};
                               },
                               id)};
}

Case bijection_case(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
    std::string id = "n=" + std::to_string(n) + " lambda=" + paren(lambda) + " mu=" + paren(mu) + " nu=" + paren(nu);
    auto fail = [&](const std::string& why) { return Case{id, false, why}; };
    auto lr = tableaux::enumerate_lr_tableaux(lambda, mu, nu);
    std::set<std::string> all, pos;
    for (const auto& L : lr) {
        all.insert(key(L));
        if (weights::is_positive(L, weights::Criterion::C1)) pos.insert(key(L));
    }
    auto ps = puzzles::enumerate_puzzles(lambda, mu, nu, n);
    auto ts = puzzles::enumerate_trapezoid_puzzles(lambda, mu, nu, n);
    if (ps.size() != pos.size()) return fail("|LP+|=" + std::to_string(ps.size()) + " |LR+|=" + std::to_string(pos.size()));
    if (ts.size() != all.size()) return fail("|LP|=" + std::to_string(ts.size()) + " |LR|=" + std::to_string(all.size()));

    auto check = [&](const puzzles::Puzzle& P, const std::set<std::string>& target, bool trap) -> std::string {
        if (!P.consistent() || !P.complete()) return "invalid puzzle";
        for (const auto& pl : P.placements()) {
            if (pl.kind != puzzles::PieceKind::E) continue;
            auto m = puzzles::march_indices(P, pl);
            auto c = puzzles::closed_form_indices(n, pl);
            if (m.e != c.e || m.f != c.f) return "closed-form indices differ from marching";
            bool bisected = pl.b == 0 && trap;
            if (pl.b > 0 && m.e <= m.f) return "piece above D with e <= f";
            if (pl.b < 0 && m.e >= m.f) return "piece below D with e >= f";
            if (bisected && m.e != m.f) return "bisected piece with e != f";
        }
        auto L = puzzles::phi(P);
        if (!target.count(key(L))) return "phi(P) is not in the tableau set";
        if (!(puzzles::phi_inverse(L, n, trap) == P)) return "phi_inverse(phi(P)) != P";
        auto wp = puzzles::puzzle_weight(P), wl = weights::weight_c_L(L);
        if (wp.sorted_factors() != wl.sorted_factors()) return "y-weights are different expressions";
        if (!trap) {
            auto Wp = puzzles::puzzle_weight(P, Family::Y), Wl = weights::weight_C_L(L, n);
            if (Wp.sorted_factors() != Wl.sorted_factors()) return "Y-weights are different expressions";
        }
        return "";
    };
    std::vector<MPoly> py, pY, ty;
    for (const auto& P : ps) {
        auto why = check(P, pos, false);
        if (!why.empty()) return fail(why);
        py.push_back(puzzles::puzzle_weight(P).poly);
        pY.push_back(puzzles::puzzle_weight(P, Family::Y).poly);
    }
    for (const auto& P : ts) {
        auto why = check(P, all, true);
        if (!why.empty()) return fail("trapezoid: " + why);
        ty.push_back(puzzles::puzzle_weight(P).poly);
    }
    for (const auto& L : lr) {
        bool positive = pos.count(key(L)) > 0;
        if (positive && !(puzzles::phi(puzzles::phi_inverse(L, n, false)) == L)) return fail("phi(phi_inverse(L)) != L");
        if (!(puzzles::phi(puzzles::phi_inverse(L, n, true)) == L)) return fail("trapezoid phi(phi_inverse(L)) != L");
    }
    MPoly c = weights::coefficient_by_tableaux(lambda, mu, nu);
    if (!(polyring::sum(py) == c)) return fail("puzzle sum differs from the tableau rule");
    if (!(polyring::sum(pY) == weights::coefficient_by_tableaux_Y(lambda, mu, nu, n)))
        return fail("Y puzzle sum differs from the tableau rule");
    if (!(polyring::specialize_y_to_Y(c, n) == polyring::sum(pY))) return fail("Y sum is not the specialization");
    if (!(polyring::sum(ty) == c)) return fail("trapezoid sum differs from the puzzle sum");
    return {id, true,
            "LP+=" + std::to_string(ps.size()) + " LR+=" + std::to_string(pos.size()) +
                " LP=" + std::to_string(ts.size()) + " LR=" + std::to_string(all.size())};
}

SuiteReport suite_bijection(const Options& opt) {
    struct Item {
        Partition l, m, nu;
        int n;
    };
    std::vector<Item> items;
    int d = opt.d, nmax = opt.n > 0 ? opt.n : 5;
    for (int n = d; n <= nmax; ++n) {
        auto shapes = core::partitions_in_box(d, n - d);
        for (const auto& l : shapes)
            for (const auto& m : shapes)
                for (const auto& nu : shapes)
                    if (nu.contains(l) && nu.contains(m) && nu.size() <= l.size() + m.size())
                        items.push_back({l, m, nu, n});
    }
    auto P = [](std::vector<int> v) { return Partition(std::move(v)); };
    items.push_back({P({1, 1}), P({2, 1}), P({2, 1}), 4});
    items.push_back({P({4, 2, 2}), P({4, 3, 1}), P({6, 5, 2}), 9});
    items.push_back({P({5, 2, 1}), P({8, 5, 1}), P({9, 4, 2}), 13});
    auto id = [](const Item& it) { return "n=" + std::to_string(it.n) + " " + it.l.str() + "/" + it.m.str() + "/" + it.nu.str(); };
    return {"bijection", run_cases<Item>(
                             items, [](const Item& it) { return bijection_case(it.l, it.m, it.nu, it.n); }, id)};
}

SuiteReport suite_positivity(const Options& opt) {
    int d = opt.d;
    auto shapes = core::partitions_inside(box(shape_or(opt, {3, 3, 3}), d));
    using Item = std::pair<Partition, Partition>;
    std::vector<Item> items;
    for (const auto& l : shapes)
        for (const auto& m : shapes) items.push_back({l, m});
    auto id = [](const Item& it) { return "lambda=" + paren(it.first) + " mu=" + paren(it.second); };
    return {"positivity",
            run_cases<Item>(
                items,
                [&](const Item& it) {
                    auto all = tableaux::enumerate_lr_tableaux_all(it.first, it.second, Partition::zero(d));
                    std::size_t nonzero = 0;
                    for (const auto& L : all) {
                        auto w = weights::weight_c_L(L);
                        bool nz = !w.poly.is_zero();
                        nonzero += nz;
                        bool all_gt = std::all_of(w.factors.begin(), w.factors.end(),
                                                  [](const auto& f) { return f.e > f.f; });
                        if (nz && !all_gt)
                            return Case{id(it), false, "nonzero weight with a factor e <= f: " + tableaux::render_inline(L.inner)};
                        for (auto c : weights::all_criteria)
                            if (weights::is_positive(L, c) != nz)
                                return Case{id(it), false,
                                            weights::criterion_name(c) + " disagrees on " +
                                                tableaux::render_inline(L.inner)};
                    }
                    for (const auto& [nu, c] : weights::coefficient_table_by_tableaux(it.first, it.second)) {
                        int deg = it.first.size() + it.second.size() - nu.size();
                        for (const auto& t : c.terms())
                            if (t.mono.degree() != deg)
                                return Case{id(it), false, "nu=" + paren(nu) + " is not homogeneous of degree " +
                                                               std::to_string(deg)};
                    }
                    return Case{id(it), true,
                                std::to_string(all.size()) + " tableaux, " + std::to_string(nonzero) + " nonzero"};
                },
                id)};
}

SuiteReport suite_symmetry(const Options& opt) {
    int d = opt.d;
    auto b = shape_or(opt, {3, 3, 3});
    int n = opt.n > 0 ? opt.n : d + 2 * (b.empty() ? 0 : b[0]);
    auto shapes = core::partitions_inside(box(b, d));
    using Item = std::pair<Partition, Partition>;
    std::vector<Item> items;
    for (const auto& l : shapes)
        for (const auto& m : shapes)
            if (l <= m) items.push_back({l, m});
    auto id = [](const Item& it) { return "lambda=" + paren(it.first) + " mu=" + paren(it.second); };
    return {"symmetry", run_cases<Item>(
                            items,
                            [&](const Item& it) {
                                auto lm = weights::coefficient_table_by_tableaux(it.first, it.second);
                                auto ml = weights::coefficient_table_by_tableaux(it.second, it.first);
                                if (lm != ml) return Case{id(it), false, "c_{lambda,mu} != c_{mu,lambda}"};
                                for (const auto& [nu, c] : lm) {
                                    if (!nu.in_box(n)) continue;
                                    if (!(weights::coefficient_by_tableaux_Y(it.first, it.second, nu, n) ==
                                          polyring::specialize_y_to_Y(c, n)))
                                        return Case{id(it), false, "C differs from the specialization at nu=" + paren(nu)};
                                }
                                return Case{id(it), true, std::to_string(lm.size()) + " nonzero nu"};
                            },
                            id)};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bialternant", "lra",       "induction",  "badguys",
                                                "involutions", "bijection", "positivity", "symmetry"};
    return names;
}

SuiteReport run_suite(const std::string& name, const Options& opt) {
    if (name == "bialternant") return suite_bialternant(opt);
    if (name == "lra") return suite_lra(opt);
    if (name == "induction") return suite_induction(opt);
    if (name == "badguys") return suite_badguys(opt);
    if (name == "involutions") return suite_involutions(opt);
    if (name == "bijection") return suite_bijection(opt);
    if (name == "positivity") return suite_positivity(opt);
    if (name == "symmetry") return suite_symmetry(opt);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace eqlr::verify
