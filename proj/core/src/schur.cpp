#include "eqlr/schur.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "eqlr/involutions.hpp"

namespace eqlr::schur {

using polyring::Family;
using polyring::XGraded;
using tableaux::Entry;

MPoly falling_product(int j, int k) {
    if (k < 0) throw DomainError("falling product needs k >= 0");
    MPoly p(1);
    for (int t = 1; t <= k; ++t) p *= MPoly::x(j) - MPoly::y(t);
    return p;
}

namespace {

const MPoly& cached_falling(int j, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, MPoly> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({j, k});
    if (it == cache.end()) it = cache.emplace(std::make_pair(j, k), falling_product(j, k)).first;
    return it->second;
}

}  // namespace

MPoly falling_power(const Composition& xi) {
    MPoly p(1);
    for (int j = 0; j < xi.d(); ++j) p *= cached_falling(j + 1, xi[j]);
    return p;
}

MPoly tableau_monomial(const BarredTableau& R) {
    MPoly p(1);
    int d = R.d();
    for (int k = 0; k < R.shape->size(); ++k) {
        const Entry& e = R[k];
        if (e.empty()) continue;
        const auto& cell = R.shape->cell(k);
        p *= MPoly::x(e.value) - MPoly::y(core::primed(e.value, d) + cell.c - cell.r);
    }
    return p;
}

namespace {

// Depth-first over reverse tableaux, sharing prefix products.
MPoly schur_sum(const tableaux::Shape& shape, int d) {
    const auto& sh = *shape;
    int n = sh.size();
    std::vector<int> val(static_cast<size_t>(n), 0);
    std::vector<int> below(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = sh.below(i); j >= 0; j = sh.below(j)) ++below[static_cast<size_t>(i)];
    std::vector<MPoly> leaves;
    auto rec = [&](auto&& self, int idx, const MPoly& acc) -> void {
        if (idx == n) {
            leaves.push_back(acc);
            return;
        }
        int lo = 1, hi = d - below[static_cast<size_t>(idx)];
        int up = sh.above(idx);
        if (up >= 0) lo = val[static_cast<size_t>(up)] + 1;
        int rt = sh.right(idx);
        if (rt >= 0) hi = std::min(hi, val[static_cast<size_t>(rt)]);
        const auto& cell = sh.cell(idx);
        for (int v = lo; v <= hi; ++v) {
            val[static_cast<size_t>(idx)] = v;
            MPoly f = MPoly::x(v) - MPoly::y(core::primed(v, d) + cell.c - cell.r);
            self(self, idx + 1, acc * f);
        }
    };
    rec(rec, 0, MPoly(1));
    return polyring::sum(std::move(leaves));
}

}  // namespace

const MPoly& factorial_schur(const Partition& mu, int d) {
    static std::mutex m;
    static std::map<std::pair<std::vector<int>, int>, MPoly> cache;
    Partition p = mu.padded(d);
    {
        std::lock_guard lock(m);
        auto it = cache.find({p.parts(), d});
        if (it != cache.end()) return it->second;
    }
    MPoly s = schur_sum(tableaux::make_shape(p), d);
    std::lock_guard lock(m);
    return cache.emplace(std::make_pair(p.parts(), d), std::move(s)).first->second;
}

MPoly factorial_schur(const Partition& mu, const Partition& kappa, int d) {
    return schur_sum(tableaux::make_shape(mu.padded(d), kappa.padded(d)), d);
}

MPoly alternant(const Composition& xi) {
    int d = xi.d();
    polyring::PolyMatrix m(static_cast<size_t>(d), std::vector<MPoly>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cached_falling(j + 1, xi[i]);
    return polyring::determinant(m);
}

namespace {

const MPoly& cached_alternant(const Composition& xi) {
    static std::mutex mu;
    static std::map<std::vector<int>, MPoly> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(xi.entries());
        if (it != cache.end()) return it->second;
    }
    MPoly a = alternant(xi);
    std::lock_guard lock(mu);
    return cache.emplace(xi.entries(), std::move(a)).first->second;
}

Composition rho_c(int d) { return Composition(core::rho(d).parts()); }

bool dominant(const std::vector<int>& alpha) { return std::is_sorted(alpha.rbegin(), alpha.rend()); }

// A symmetric polynomial is determined by its coefficients at partition exponents.
// Throws InvariantError if g is not symmetric in x.
XGraded dominant_part(const XGraded& g) {
    XGraded out;
    for (const auto& [alpha, c] : g) {
        if (dominant(alpha)) {
            out.emplace(alpha, c);
            continue;
        }
        auto sorted = alpha;
        std::sort(sorted.rbegin(), sorted.rend());
        auto it = g.find(sorted);
        if (it == g.end() || !(it->second == c)) throw InvariantError("product is not symmetric in x");
    }
    return out;
}

const XGraded& grouped_schur(const Partition& nu, int d) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, int>, XGraded> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({nu.parts(), d});
        if (it != cache.end()) return it->second;
    }
    XGraded g = dominant_part(polyring::group_by_x(factorial_schur(nu, d), d));
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(nu.parts(), d), std::move(g)).first->second;
}

}  // namespace

bool verify_bialternant(const Partition& mu, int d) {
    Partition p = mu.padded(d);
    return alternant(rho_c(d)) * factorial_schur(p, d) == alternant(p + rho_c(d));
}

CoefficientTable expand_product_oracle(const Partition& lambda, const Partition& mu, int d) {
    return expand_product_oracle(lambda, mu, Partition::zero(d), d);
}

CoefficientTable expand_product_oracle(const Partition& lambda, const Partition& mu, const Partition& kappa, int d) {
    Partition l = lambda.padded(d), m = mu.padded(d), k = kappa.padded(d);
    MPoly right = k.size() == 0 ? factorial_schur(m, d) : factorial_schur(m, k, d);
    XGraded rest = dominant_part(polyring::group_by_x(factorial_schur(l, d) * right, d));
    CoefficientTable table;
    while (!rest.empty()) {
        auto [alpha, c] = *rest.begin();
        if (!dominant(alpha)) throw InvariantError("leading exponent is not a partition; the product is not symmetric");
        Partition nu(alpha);
        const XGraded& s = grouped_schur(nu, d);
        auto lead = s.find(alpha);
        if (s.begin()->first != alpha || lead == s.end() || !(lead->second == MPoly(1)))
            throw InvariantError("factorial Schur function does not have leading term x^nu");
        for (const auto& [e, coeff] : s) {
            auto it = rest.find(e);
            MPoly delta = coeff * c;
            if (it == rest.end()) {
                rest.emplace(e, -delta);
            } else {
                it->second -= delta;
                if (it->second.is_zero()) rest.erase(it);
            }
        }
        table.emplace(std::move(nu), std::move(c));
    }
    return table;
}

MPoly rebuild_from_table(const CoefficientTable& table, int d) {
    std::vector<MPoly> parts;
    for (const auto& [nu, c] : table) parts.push_back(c * factorial_schur(nu, d));
    return polyring::sum(std::move(parts));
}

bool verify_lemma_product_alternant(const Partition& lambda, const Partition& mu, int d) {
    return verify_lemma_product_alternant(lambda, mu, Partition::zero(d), d);
}

bool verify_lemma_product_alternant(const Partition& lambda, const Partition& mu, const Partition& kappa, int d) {
    Partition l = lambda.padded(d), m = mu.padded(d), k = kappa.padded(d);
    Composition base = l + rho_c(d);
    MPoly s = k.size() == 0 ? factorial_schur(m, d) : factorial_schur(m, k, d);
    MPoly lhs = alternant(base) * s;
    std::map<std::vector<int>, std::vector<MPoly>> by_omega;
    for (const auto& B : tableaux::enumerate_barred_tableaux(m, k, d)) {
        tableaux::SkewBarredTableau L{l, B};
        by_omega[core::content(B.unbarred_word(), d).entries()].push_back(weights::weight_c_L(L).poly);
    }
    std::vector<MPoly> parts;
    for (auto& [omega, cs] : by_omega) {
        MPoly c = polyring::sum(std::move(cs));
        if (c.is_zero()) continue;
        parts.push_back(c * cached_alternant(base + Composition(omega)));
    }
    return lhs == polyring::sum(std::move(parts));
}

bool verify_lemma_induction(const BarredTableau& R, const Composition& xi) {
    int d = R.d();
    if (xi.d() != d) throw DomainError("xi has the wrong length");
    std::vector<int> filled;
    BarredTableau plain = R;
    for (int k = 0; k < R.shape->size(); ++k) {
        plain.entries[static_cast<size_t>(k)].barred = false;
        if (!R[k].empty()) filled.push_back(k);
    }
    if (filled.size() > 20) throw DomainError("too many entries for the induction check");
    MPoly lhs = falling_power(xi) * tableau_monomial(plain);
    Composition shift = xi + core::ones(d);
    std::map<std::vector<int>, std::vector<MPoly>> by_omega;
    for (unsigned mask = 0; mask < (1u << filled.size()); ++mask) {
        BarredTableau B = plain;
        for (size_t t = 0; t < filled.size(); ++t)
            if (mask >> t & 1u) B.entries[static_cast<size_t>(filled[t])].barred = true;
        auto w = B.unbarred_word();
        by_omega[core::content(w, d).entries()].push_back(weights::weight_c_xi_B(shift, B).poly);
    }
    std::vector<MPoly> parts;
    for (auto& [omega, cs] : by_omega) {
        MPoly c = polyring::sum(std::move(cs));
        if (!c.is_zero()) parts.push_back(c * falling_power(xi + Composition(omega)));
    }
    return lhs == polyring::sum(std::move(parts));
}

BadGuyReport verify_bad_guys_vanish(const Partition& lambda, const Partition& mu, int d) {
    using involutions::HattedTableau;
    Partition l = lambda.padded(d), m = mu.padded(d);
    Composition base = l + rho_c(d);
    Composition xi = weights::star_shift(l);
    BadGuyReport rep;
    rep.pairing_ok = true;
    std::map<std::vector<int>, std::vector<MPoly>> by_omega;
    auto all = involutions::enumerate_hatted(m, d);
    rep.hatted = all.size();
    for (const auto& H : all) {
        if (!involutions::is_bad_guy(H, l)) continue;
        ++rep.bad_guys;
        MPoly w = involutions::weight_d_xi_H(xi, H);
        Composition omega = H.unhatted_content();
        by_omega[omega.entries()].push_back(w);

        int i = 0;
        auto star = involutions::bad_guy_star(H, l, &i);
        bool ok = star && star->is_valid() && involutions::is_bad_guy(*star, l);
        if (ok) {
            auto back = involutions::bad_guy_star(*star, l);
            ok = back && *back == H;
        }
        if (ok) ok = involutions::weight_d_xi_H(xi, *star) == w;
        if (ok) ok = base + star->unhatted_content() == (base + omega).swapped(i);
        if (ok && *star == H) {
            ++rep.fixed_points;
            ok = cached_alternant(base + omega).is_zero();
        }
        if (!ok) rep.pairing_ok = false;
    }
    std::vector<MPoly> parts;
    for (auto& [omega, ws] : by_omega) {
        MPoly c = polyring::sum(std::move(ws));
        if (!c.is_zero()) parts.push_back(c * cached_alternant(base + Composition(omega)));
    }
    rep.sum_is_zero = polyring::sum(std::move(parts)).is_zero();
    return rep;
}

}  // namespace eqlr::schur
