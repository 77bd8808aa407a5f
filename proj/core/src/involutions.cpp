#include "eqlr/involutions.hpp"

#include <algorithm>

namespace eqlr::involutions {

using polyring::Family;
using tableaux::Entry;

bool HattedTableau::is_valid() const { return bar_projection().is_valid(); }

BarredTableau HattedTableau::bar_projection() const {
    BarredTableau B{shape, {}};
    B.entries.reserve(entries.size());
    for (const auto& e : entries) B.entries.push_back(Entry{e.value, e.hat != Hat::none});
    return B;
}

std::vector<int> HattedTableau::unhatted_word() const { return unhatted_word_before(shape->size()); }

std::vector<int> HattedTableau::unhatted_word_before(int idx) const {
    std::vector<int> w;
    for (int k = 0; k < idx; ++k) {
        const auto& e = entries[static_cast<size_t>(k)];
        if (!e.empty() && e.hat == Hat::none) w.push_back(e.value);
    }
    return w;
}

Composition HattedTableau::unhatted_content() const { return core::content(unhatted_word(), d()); }

HattedTableau HattedTableau::columns_le(int j) const {
    HattedTableau h = *this;
    for (int k = 0; k < shape->size(); ++k)
        if (shape->cell(k).c > j) h.entries[static_cast<size_t>(k)] = HEntry{};
    return h;
}

HattedTableau HattedTableau::columns_gt(int j) const {
    HattedTableau h = *this;
    for (int k = 0; k < shape->size(); ++k)
        if (shape->cell(k).c <= j) h.entries[static_cast<size_t>(k)] = HEntry{};
    return h;
}

std::string HattedTableau::str() const {
    std::string s;
    bool first_row = true;
    for (int r = d(); r >= 1; --r) {
        if (shape->mu()[r - 1] == shape->kappa()[r - 1]) continue;
        if (!first_row) s += " | ";
        first_row = false;
        for (int c = shape->mu()[r - 1]; c > shape->kappa()[r - 1]; --c) {
            const auto& e = entries[static_cast<size_t>(shape->index(r, c))];
            if (c != shape->mu()[r - 1]) s += ' ';
            if (e.empty()) {
                s += '.';
                continue;
            }
            if (e.hat == Hat::left) s += 'v';
            if (e.hat == Hat::right) s += '^';
            s += std::to_string(e.value);
        }
    }
    return s;
}

std::vector<HattedTableau> hattings(const BarredTableau& B) {
    std::vector<int> bars;
    for (int k = 0; k < B.shape->size(); ++k)
        if (B[k].barred) bars.push_back(k);
    std::vector<HattedTableau> out;
    for (unsigned mask = 0; mask < (1u << bars.size()); ++mask) {
        HattedTableau h{B.shape, {}};
        for (const auto& e : B.entries) h.entries.push_back(HEntry{e.value, Hat::none});
        for (size_t t = 0; t < bars.size(); ++t)
            h.entries[static_cast<size_t>(bars[t])].hat = (mask >> t & 1u) ? Hat::right : Hat::left;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HattedTableau> enumerate_hatted(const Partition& mu, int d) {
    return enumerate_hatted(mu, Partition::zero(d), d);
}

std::vector<HattedTableau> enumerate_hatted(const Partition& mu, const Partition& kappa, int d) {
    std::vector<HattedTableau> out;
    for (const auto& B : tableaux::enumerate_barred_tableaux(mu, kappa, d)) {
        auto hs = hattings(B);
        out.insert(out.end(), std::make_move_iterator(hs.begin()), std::make_move_iterator(hs.end()));
    }
    return out;
}

int e_index(const Composition& xi, const HattedTableau& H, int idx) {
    int v = H[idx].value;
    auto w = H.unhatted_word_before(idx);
    return xi[v - 1] + static_cast<int>(std::count(w.begin(), w.end(), v));
}

int f_index(const HattedTableau& H, int idx) {
    const auto& cell = H.shape->cell(idx);
    return core::primed(H[idx].value, H.d()) + cell.c - cell.r;
}

MPoly weight_d_xi_H(const Composition& xi, const HattedTableau& H) {
    if (xi.d() != H.d()) throw DomainError("xi has the wrong length");
    polyring::Monomial m;
    int sign = 1;
    std::vector<int> cnt = xi.entries();
    for (int k = 0; k < H.shape->size(); ++k) {
        const auto& e = H[k];
        if (e.empty()) continue;
        if (e.hat == Hat::left) {
            int idx = cnt[static_cast<size_t>(e.value - 1)];
            if (idx < 1) throw DomainError("y index below 1 in d_{xi,H}");
            m = m * polyring::Monomial::var(Family::y, idx);
        } else if (e.hat == Hat::right) {
            m = m * polyring::Monomial::var(Family::y, f_index(H, k));
            sign = -sign;
        } else {
            ++cnt[static_cast<size_t>(e.value - 1)];
        }
    }
    return MPoly::monomial(m, sign);
}

namespace {

// Box in the same column holding the other value of {i, i+1}, or -1.
int partner(const HattedTableau& H, int idx, int i) {
    int v = H[idx].value;
    int want = v == i ? i + 1 : i;
    auto [lo, hi] = H.shape->column_range(H.shape->cell(idx).c);
    for (int k = lo; k < hi; ++k)
        if (H[k].value == want) return k;
    return -1;
}

struct Item {
    HEntry e;
    int origin;
};

}  // namespace

std::vector<EntryClass> classify(const HattedTableau& H, int i) {
    std::vector<EntryClass> cls(static_cast<size_t>(H.shape->size()), EntryClass::other);
    for (int k = 0; k < H.shape->size(); ++k) {
        int v = H[k].value;
        if (v != i && v != i + 1) continue;
        int p = partner(H, k, i);
        if (p < 0)
            cls[static_cast<size_t>(k)] = EntryClass::free;
        else if (H[k].hat != Hat::none || H[p].hat != Hat::none)
            cls[static_cast<size_t>(k)] = EntryClass::semi_free;
        else
            cls[static_cast<size_t>(k)] = EntryClass::locked;
    }
    return cls;
}

namespace {

void transform_string(const HattedTableau& H, const std::vector<int>& run, int i, HattedTableau& out,
                      EntryMap& map) {
    std::vector<Item> S;
    for (int idx : run) S.push_back({H[idx], idx});
    // step 1 on the entries without a right hat
    std::vector<Item> low, high;  // new value i, new value i+1
    for (const auto& it : S) {
        if (it.e.hat == Hat::right) continue;
        Item t = it;
        t.e.value = (it.e.value == i) ? i + 1 : i;
        (t.e.value == i ? low : high).push_back(t);
    }
    {
        size_t a = 0, b = 0;
        for (auto& it : S) {
            if (it.e.hat == Hat::right) continue;
            it = a < low.size() ? low[a++] : high[b++];
        }
    }
    // step 2
    std::vector<int> right_i, right_i1;
    for (const auto& it : S) {
        if (it.e.hat != Hat::right) continue;
        (it.e.value == i ? right_i : right_i1).push_back(it.origin);
    }
    auto pos_of = [&](int origin) {
        for (size_t p = 0; p < S.size(); ++p)
            if (S[p].origin == origin) return static_cast<int>(p);
        throw InvariantError("lost an entry while applying s_i");
    };
    for (int o : right_i) {
        int p = pos_of(o);
        if (p > 0 && S[static_cast<size_t>(p - 1)].e.value == i + 1) {
            std::swap(S[static_cast<size_t>(p - 1)], S[static_cast<size_t>(p)]);
            S[static_cast<size_t>(p - 1)].e.value = i + 1;
        }
    }
    for (auto it = right_i1.rbegin(); it != right_i1.rend(); ++it) {
        int p = pos_of(*it);
        if (p + 1 < static_cast<int>(S.size()) && S[static_cast<size_t>(p + 1)].e.value == i) {
            std::swap(S[static_cast<size_t>(p + 1)], S[static_cast<size_t>(p)]);
            S[static_cast<size_t>(p + 1)].e.value = i;
        }
    }
    for (size_t k = 0; k < S.size(); ++k) {
        int idx = run[k];
        out.entries[static_cast<size_t>(idx)] = S[k].e;
        if (S[k].e.hat == Hat::left) map.b_l[S[k].origin] = idx;
        if (S[k].e.hat == Hat::right) map.b_r[S[k].origin] = idx;
    }
}

}  // namespace

SiResult apply_s_i(const HattedTableau& H, int i) {
    const auto& sh = *H.shape;
    if (i < 1 || i >= H.d()) throw DomainError("s_i needs 1 <= i <= d-1");
    auto cls = classify(H, i);
    SiResult res{H, {}};
    // Entries outside {i, i+1} and locked ones keep their hats in place.
    for (int k = 0; k < sh.size(); ++k) {
        auto c = cls[static_cast<size_t>(k)];
        if (c == EntryClass::free || c == EntryClass::semi_free) continue;
        if (H[k].hat == Hat::left) res.map.b_l[k] = k;
        if (H[k].hat == Hat::right) res.map.b_r[k] = k;
    }
    // maximal row strings of free entries, left to right
    for (int r = 1; r <= H.d(); ++r) {
        std::vector<int> run;
        auto flush = [&] {
            if (!run.empty()) transform_string(H, run, i, res.tableau, res.map);
            run.clear();
        };
        for (int c = sh.mu()[r - 1]; c > sh.kappa()[r - 1]; --c) {
            int idx = sh.index(r, c);
            if (cls[static_cast<size_t>(idx)] == EntryClass::free)
                run.push_back(idx);
            else
                flush();
        }
        flush();
    }
    // step 3
    for (int k = 0; k < sh.size(); ++k) {
        if (cls[static_cast<size_t>(k)] != EntryClass::semi_free) continue;
        int p = partner(H, k, i);
        res.tableau.entries[static_cast<size_t>(p)].hat = H[k].hat;
        if (H[k].hat == Hat::left) res.map.b_l[k] = p;
        if (H[k].hat == Hat::right) res.map.b_r[k] = p;
    }
    return res;
}

HattedTableau apply_sigma(const std::vector<int>& word, const HattedTableau& H) {
    HattedTableau cur = H;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_s_i(cur, *it).tableau;
    return cur;
}

namespace {

// lambda + omega(H^u_{<=j}) for j = 1..columns, reporting the first j where it fails.
std::optional<std::pair<int, std::vector<int>>> first_failure(const HattedTableau& H, const Partition& lambda) {
    const auto& sh = *H.shape;
    if (lambda.d() != H.d()) throw DomainError("lambda has the wrong length");
    std::vector<int> cnt = lambda.parts();
    for (int j = 1; j <= sh.columns(); ++j) {
        auto [lo, hi] = sh.column_range(j);
        for (int k = lo; k < hi; ++k)
            if (!H[k].empty() && H[k].hat == Hat::none) ++cnt[static_cast<size_t>(H[k].value - 1)];
        if (!std::is_sorted(cnt.rbegin(), cnt.rend())) return std::make_pair(j, cnt);
    }
    return std::nullopt;
}

}  // namespace

std::optional<int> bad_guy_column(const HattedTableau& H, const Partition& lambda) {
    auto f = first_failure(H, lambda);
    if (!f) return std::nullopt;
    return f->first;
}

bool is_bad_guy(const HattedTableau& H, const Partition& lambda) { return first_failure(H, lambda).has_value(); }

std::optional<HattedTableau> bad_guy_star(const HattedTableau& H, const Partition& lambda, int* swapped) {
    auto f = first_failure(H, lambda);
    if (!f) return std::nullopt;
    auto [j, cnt] = *f;
    int i = 1;
    while (cnt[static_cast<size_t>(i - 1)] >= cnt[static_cast<size_t>(i)]) ++i;
    if (swapped) *swapped = i;
    HattedTableau tail = apply_s_i(H.columns_gt(j), i).tableau;
    HattedTableau star = H;
    for (int k = 0; k < H.shape->size(); ++k)
        if (H.shape->cell(k).c > j) star.entries[static_cast<size_t>(k)] = tail.entries[static_cast<size_t>(k)];
    return star;
}

}  // namespace eqlr::involutions
