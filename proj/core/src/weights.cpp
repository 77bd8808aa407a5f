#include "eqlr/weights.hpp"

#include <algorithm>

namespace eqlr::weights {

using tableaux::Entry;

std::string WeightFactor::str() const {
    return "(" + polyring::var_name(family, e) + "-" + polyring::var_name(family, f) + ")";
}

std::string Weight::factored() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& f : factors) s += f.str();
    return s;
}

std::vector<WeightFactor> Weight::sorted_factors() const {
    auto v = factors;
    std::sort(v.begin(), v.end());
    return v;
}

std::string render_sum(const std::vector<Weight>& ws, Family family) {
    bool up = family == Family::Y;
    std::vector<std::vector<WeightFactor>> terms;
    for (const auto& w : ws) {
        if (w.poly.is_zero()) continue;
        auto f = w.sorted_factors();
        if (!up) std::reverse(f.begin(), f.end());
        terms.push_back(std::move(f));
    }
    if (terms.empty()) return "0";
    std::sort(terms.begin(), terms.end());
    if (!up) std::reverse(terms.begin(), terms.end());
    std::string s;
    for (size_t k = 0; k < terms.size(); ++k) {
        if (k) s += '+';
        if (terms[k].empty()) s += '1';
        for (const auto& f : terms[k]) s += f.str();
    }
    return s;
}

Weight make_weight(std::vector<WeightFactor> factors) {
    Weight w;
    w.factors = std::move(factors);
    for (const auto& f : w.factors) {
        w.poly *= f.poly();
        if (w.poly.is_zero()) break;
    }
    return w;
}

namespace {

// Calls fn(idx, entry, counts_before) for every non-empty box in reading order,
// counts starting from `start`.
template <class Fn>
void walk(const BarredTableau& B, std::vector<int> counts, Fn&& fn) {
    for (int idx = 0; idx < B.shape->size(); ++idx) {
        const Entry& e = B[idx];
        if (e.empty()) continue;
        fn(idx, e, counts);
        if (!e.barred) ++counts[static_cast<size_t>(e.value - 1)];
    }
}

}  // namespace

Weight weight_c_xi_B(const Composition& xi, const BarredTableau& B) {
    int d = B.d();
    if (xi.d() != d) throw DomainError("xi has length " + std::to_string(xi.d()) + ", expected " + std::to_string(d));
    std::vector<WeightFactor> fs;
    walk(B, xi.entries(), [&](int idx, const Entry& e, const std::vector<int>& cnt) {
        if (!e.barred) return;
        const auto& cell = B.shape->cell(idx);
        int ap = core::primed(e.value, d);
        int ei = cnt[static_cast<size_t>(e.value - 1)];
        if (ei < 1) throw DomainError("y index below 1 in c_{xi,B}");
        fs.push_back({Family::y, ei, ap + cell.c - cell.r});
    });
    return make_weight(std::move(fs));
}

Composition star_shift(const Partition& lambda) {
    return lambda + (Composition(core::rho(lambda.d()).parts()) + core::ones(lambda.d()));
}

Weight weight_c_L(const SkewBarredTableau& L) {
    int d = L.d();
    std::vector<WeightFactor> fs;
    walk(L.inner, L.lambda.parts(), [&](int idx, const Entry& e, const std::vector<int>& cnt) {
        if (!e.barred) return;
        const auto& cell = L.inner.shape->cell(idx);
        int ap = core::primed(e.value, d);
        fs.push_back({Family::y, ap + cnt[static_cast<size_t>(e.value - 1)], ap + cell.c - cell.r});
    });
    return make_weight(std::move(fs));
}

void require_in_box(const Partition& p, int n, const char* name) {
    if (p.d() > n || !p.in_box(n))
        throw DomainError(std::string(name) + " = (" + p.str() + ") is not in P_{" + std::to_string(p.d()) + "," +
                          std::to_string(n) + "}");
}

Weight weight_C_L(const SkewBarredTableau& L, int n) {
    int d = L.d();
    require_in_box(L.lambda, n, "lambda");
    require_in_box(L.inner.shape->mu(), n, "mu");
    require_in_box(Partition(unbarred_content(L).entries()), n, "nu");
    std::vector<WeightFactor> fs;
    walk(L.inner, L.lambda.parts(), [&](int idx, const Entry& e, const std::vector<int>& cnt) {
        if (!e.barred) return;
        const auto& cell = L.inner.shape->cell(idx);
        int base = (n - d) + e.value;
        int hi = base - (cell.c - cell.r);
        int lo = base - cnt[static_cast<size_t>(e.value - 1)];
        if (hi < 1 || lo < 1) throw InvariantError("Y index below 1 in C_L");
        fs.push_back({Family::Y, hi, lo});
    });
    return make_weight(std::move(fs));
}

int delta(const SkewBarredTableau& L, int idx) {
    const Entry& a = L.inner[idx];
    if (a.empty()) throw DomainError("delta of an empty box");
    auto w = tableaux::word_prefix_before(L, idx);
    int count = static_cast<int>(std::count(w.begin(), w.end(), a.value));
    if (!a.barred) ++count;
    const auto& cell = L.inner.shape->cell(idx);
    return count - cell.c + cell.r;
}

std::string criterion_name(Criterion c) {
    switch (c) {
        case Criterion::C1: return "C1";
        case Criterion::C2: return "C2";
        case Criterion::C3: return "C3";
        case Criterion::C4: return "C4";
        case Criterion::C5: return "C5";
        case Criterion::Molev: return "Molev";
    }
    return "?";
}

bool is_positive(const SkewBarredTableau& L, Criterion crit) {
    if (!core::is_yamanouchi(tableaux::unbarred_column_word(L)))
        throw DomainError("unbarred column word is not Yamanouchi");
    if (crit == Criterion::C1) {
        for (const auto& f : weight_c_L(L).factors)
            if (f.e <= f.f) return false;
        return true;
    }
    if (crit == Criterion::Molev) {
        Composition nu = unbarred_content(L);
        const auto& sh = *L.inner.shape;
        for (int idx = 0; idx < sh.size(); ++idx) {
            const auto& cell = sh.cell(idx);
            if (cell.r == 1 && nu[L.inner[idx].value - 1] < cell.c) return false;
        }
        return true;
    }
    bool ok = true;
    walk(L.inner, L.lambda.parts(), [&](int idx, const Entry& e, const std::vector<int>& cnt) {
        if (!e.barred || !ok) return;
        const auto& cell = L.inner.shape->cell(idx);
        int w = cnt[static_cast<size_t>(e.value - 1)];
        switch (crit) {
            case Criterion::C2: ok = w > cell.c - cell.r; break;
            case Criterion::C3: ok = cell.r != 1 || w > cell.c - cell.r; break;
            case Criterion::C4: ok = w >= cell.c; break;
            case Criterion::C5: ok = cell.r != 1 || w >= cell.c; break;
            default: break;
        }
    });
    return ok;
}

namespace {

MPoly sum_weights(const std::vector<SkewBarredTableau>& Ls, bool positive_only) {
    std::vector<MPoly> parts;
    parts.reserve(Ls.size());
    for (const auto& L : Ls) {
        Weight w = weight_c_L(L);
        if (positive_only && std::any_of(w.factors.begin(), w.factors.end(), [](auto& f) { return f.e <= f.f; }))
            continue;
        parts.push_back(std::move(w.poly));
    }
    return polyring::sum(std::move(parts));
}

}  // namespace

MPoly coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& kappa,
                              const Partition& nu, bool positive_only) {
    return sum_weights(tableaux::enumerate_lr_tableaux(lambda, mu, kappa, nu), positive_only);
}

MPoly coefficient_by_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu,
                              bool positive_only) {
    return sum_weights(tableaux::enumerate_lr_tableaux(lambda, mu, nu), positive_only);
}

CoefficientTable coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu,
                                               const Partition& kappa, bool positive_only) {
    std::map<Partition, std::vector<SkewBarredTableau>> by_nu;
    for (auto& L : tableaux::enumerate_lr_tableaux_all(lambda, mu, kappa)) {
        Partition nu(unbarred_content(L).entries());
        by_nu[nu].push_back(std::move(L));
    }
    CoefficientTable out;
    for (const auto& [nu, Ls] : by_nu) {
        MPoly c = sum_weights(Ls, positive_only);
        if (!c.is_zero()) out.emplace(nu, std::move(c));
    }
    return out;
}

CoefficientTable coefficient_table_by_tableaux(const Partition& lambda, const Partition& mu, bool positive_only) {
    return coefficient_table_by_tableaux(lambda, mu, Partition::zero(lambda.d()), positive_only);
}

MPoly coefficient_by_tableaux_Y(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                                bool positive_only) {
    require_in_box(lambda, n, "lambda");
    require_in_box(mu, n, "mu");
    require_in_box(nu, n, "nu");
    std::vector<MPoly> parts;
    for (const auto& L : tableaux::enumerate_lr_tableaux(lambda, mu, nu)) {
        Weight w = weight_C_L(L, n);
        if (positive_only && std::any_of(w.factors.begin(), w.factors.end(), [](auto& f) { return f.e <= f.f; }))
            continue;
        parts.push_back(std::move(w.poly));
    }
    return polyring::sum(std::move(parts));
}

}  // namespace eqlr::weights
