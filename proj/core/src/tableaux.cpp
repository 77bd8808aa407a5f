#include "eqlr/tableaux.hpp"

#include <algorithm>

namespace eqlr::tableaux {

ReverseDiagram::ReverseDiagram(Partition mu) : ReverseDiagram(mu, Partition::zero(mu.d())) {}

ReverseDiagram::ReverseDiagram(Partition mu, Partition kappa) : mu_(std::move(mu)), kappa_(std::move(kappa)) {
    if (kappa_.d() != mu_.d()) kappa_ = kappa_.padded(mu_.d());
    if (!mu_.contains(kappa_)) throw DomainError("inner shape " + kappa_.str() + " is not contained in " + mu_.str());
    int d = mu_.d();
    int cols = columns();
    index_.assign(static_cast<size_t>(d), std::vector<int>(static_cast<size_t>(cols), -1));
    col_start_.assign(static_cast<size_t>(cols) + 2, 0);
    for (int c = 1; c <= cols; ++c) {
        col_start_[static_cast<size_t>(c)] = static_cast<int>(cells_.size());
        for (int r = d; r >= 1; --r) {
            if (kappa_[r - 1] < c && c <= mu_[r - 1]) {
                index_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] = static_cast<int>(cells_.size());
                cells_.push_back({r, c});
            }
        }
    }
    col_start_[static_cast<size_t>(cols) + 1] = static_cast<int>(cells_.size());
}

int ReverseDiagram::index(int r, int c) const {
    if (r < 1 || r > d() || c < 1 || c > columns()) return -1;
    return index_[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)];
}

std::pair<int, int> ReverseDiagram::column_range(int c) const {
    if (c < 1 || c > columns()) return {size(), size()};
    return {col_start_[static_cast<size_t>(c)], col_start_[static_cast<size_t>(c) + 1]};
}

Shape make_shape(const Partition& mu, const Partition& kappa) { return std::make_shared<const ReverseDiagram>(mu, kappa); }
Shape make_shape(const Partition& mu) { return std::make_shared<const ReverseDiagram>(mu); }

const Entry& BarredTableau::at(int r, int c) const {
    int idx = shape->index(r, c);
    if (idx < 0) throw DomainError("cell (" + std::to_string(r) + "," + std::to_string(c) + ") is not in the diagram");
    return entries[static_cast<size_t>(idx)];
}

int BarredTableau::num_barred() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const Entry& e) { return e.barred; }));
}

bool BarredTableau::is_valid() const {
    const auto& sh = *shape;
    if (static_cast<int>(entries.size()) != sh.size()) return false;
    for (int i = 0; i < sh.size(); ++i) {
        int v = entries[static_cast<size_t>(i)].value;
        if (v < 1 || v > d()) return false;
        int up = sh.above(i);
        if (up >= 0 && entries[static_cast<size_t>(up)].value >= v) return false;
        int rt = sh.right(i);
        if (rt >= 0 && entries[static_cast<size_t>(rt)].value < v) return false;
    }
    return true;
}

std::vector<int> BarredTableau::unbarred_word() const { return unbarred_word_before(shape->size()); }

std::vector<int> BarredTableau::unbarred_word_before(int idx) const {
    std::vector<int> w;
    for (int i = 0; i < idx; ++i) {
        const Entry& e = entries[static_cast<size_t>(i)];
        if (!e.empty() && !e.barred) w.push_back(e.value);
    }
    return w;
}

BarredTableau BarredTableau::unbarred_copy() const {
    BarredTableau t = *this;
    for (auto& e : t.entries) e.barred = false;
    return t;
}

std::vector<int> lambda_word(const Partition& lambda) {
    std::vector<int> w;
    Partition conj = core::conjugate(lambda);
    for (int j = conj.d(); j >= 1; --j)
        for (int i = 1; i <= conj[j - 1]; ++i) w.push_back(i);
    return w;
}

std::vector<int> unbarred_column_word(const SkewBarredTableau& L) {
    std::vector<int> w = lambda_word(L.lambda);
    auto b = L.inner.unbarred_word();
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

std::vector<int> word_prefix_before(const SkewBarredTableau& L, int idx) {
    if (idx < 0 || idx >= L.inner.shape->size()) throw DomainError("cell is not in the tableau");
    std::vector<int> w = lambda_word(L.lambda);
    auto b = L.inner.unbarred_word_before(idx);
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

Composition unbarred_content(const SkewBarredTableau& L) {
    return L.lambda + core::content(L.inner.unbarred_word(), L.d());
}

namespace {

// Backtracking over fillings in reading order, values ascending, unbarred before barred.
// `accept(idx, entry)` may veto a choice; `undo` reverts bookkeeping; `done` sees complete fillings.
template <class Accept, class Undo, class Done>
void fill(const Shape& shape, bool bars, Accept&& accept, Undo&& undo, Done&& done) {
    const ReverseDiagram& sh = *shape;
    int d = sh.d();
    std::vector<Entry> cur(static_cast<size_t>(sh.size()));
    // cells strictly below in the same column
    std::vector<int> below_count(static_cast<size_t>(sh.size()), 0);
    for (int i = 0; i < sh.size(); ++i) {
        int k = 0;
        for (int j = sh.below(i); j >= 0; j = sh.below(j)) ++k;
        below_count[static_cast<size_t>(i)] = k;
    }
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == sh.size()) {
            done(cur);
            return;
        }
        int lo = 1, hi = d - below_count[static_cast<size_t>(idx)];
        int up = sh.above(idx);
        if (up >= 0) lo = cur[static_cast<size_t>(up)].value + 1;
        int rt = sh.right(idx);
        if (rt >= 0) hi = std::min(hi, cur[static_cast<size_t>(rt)].value);
        for (int v = lo; v <= hi; ++v) {
            for (int b = 0; b <= (bars ? 1 : 0); ++b) {
                Entry e{v, b == 1};
                if (!accept(idx, e)) continue;
                cur[static_cast<size_t>(idx)] = e;
                self(self, idx + 1);
                undo(idx, e);
            }
        }
    };
    rec(rec, 0);
}

std::vector<BarredTableau> enumerate_plain(const Shape& shape, bool bars) {
    std::vector<BarredTableau> out;
    fill(
        shape, bars, [](int, const Entry&) { return true; }, [](int, const Entry&) {},
        [&](const std::vector<Entry>& e) { out.push_back({shape, e}); });
    return out;
}

void check_d(const Partition& mu, int d) {
    if (mu.d() > d) throw DomainError("shape " + mu.str() + " has more than d parts");
}

}  // namespace

std::vector<BarredTableau> enumerate_reverse_tableaux(const Partition& mu, int d) {
    return enumerate_reverse_tableaux(mu, Partition::zero(d), d);
}

std::vector<BarredTableau> enumerate_reverse_tableaux(const Partition& mu, const Partition& kappa, int d) {
    check_d(mu, d);
    auto shape = make_shape(mu.padded(d), kappa.padded(d));
    auto out = enumerate_plain(shape, false);
    // row-major: bottom row first, each row right to left
    auto key = [&](const BarredTableau& t) {
        std::vector<int> k;
        for (int r = 1; r <= d; ++r)
            for (int c = shape->kappa()[r - 1] + 1; c <= shape->mu()[r - 1]; ++c) k.push_back(t.at(r, c).value);
        return k;
    };
    std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
    return out;
}

std::vector<BarredTableau> enumerate_barred_tableaux(const Partition& mu, int d) {
    return enumerate_barred_tableaux(mu, Partition::zero(d), d);
}

std::vector<BarredTableau> enumerate_barred_tableaux(const Partition& mu, const Partition& kappa, int d) {
    check_d(mu, d);
    return enumerate_plain(make_shape(mu.padded(d), kappa.padded(d)), true);
}

namespace {

std::vector<SkewBarredTableau> lr_impl(const Partition& lambda, const Partition& mu, const Partition& kappa,
                                       const Partition* nu) {
    int d = lambda.d();
    if (mu.d() != d || (nu && nu->d() != d)) throw DomainError("lambda, mu, nu must have the same length d");
    auto shape = make_shape(mu, kappa);
    std::vector<int> cnt = lambda.parts();
    int total_cells = shape->size();
    int missing = 0;  // unbarred entries still required to reach nu
    if (nu) {
        if (!nu->contains(lambda)) return {};
        missing = nu->size() - lambda.size();
        if (missing > total_cells || missing < 0) return {};
    }
    std::vector<SkewBarredTableau> out;
    fill(
        shape, true,
        [&](int idx, const Entry& e) {
            int remaining_after = total_cells - idx - 1;
            if (e.barred) return !nu || missing <= remaining_after;
            int k = e.value - 1;
            if (k > 0 && cnt[static_cast<size_t>(k)] + 1 > cnt[static_cast<size_t>(k - 1)]) return false;
            if (nu) {
                if (cnt[static_cast<size_t>(k)] + 1 > (*nu)[k]) return false;
                if (missing - 1 > remaining_after) return false;
                --missing;
            }
            ++cnt[static_cast<size_t>(k)];
            return true;
        },
        [&](int, const Entry& e) {
            if (e.barred) return;
            --cnt[static_cast<size_t>(e.value - 1)];
            if (nu) ++missing;
        },
        [&](const std::vector<Entry>& e) {
            if (nu && missing != 0) return;
            out.push_back({lambda, BarredTableau{shape, e}});
        });
    return out;
}

}  // namespace

std::vector<SkewBarredTableau> enumerate_lr_tableaux(const Partition& lambda, const Partition& mu,
                                                     const Partition& kappa, const Partition& nu) {
    return lr_impl(lambda, mu, kappa.padded(lambda.d()), &nu);
}

std::vector<SkewBarredTableau> enumerate_lr_tableaux(const Partition& lambda, const Partition& mu,
                                                     const Partition& nu) {
    return lr_impl(lambda, mu, Partition::zero(lambda.d()), &nu);
}

std::vector<SkewBarredTableau> enumerate_lr_tableaux_all(const Partition& lambda, const Partition& mu,
                                                         const Partition& kappa) {
    return lr_impl(lambda, mu, kappa.padded(lambda.d()), nullptr);
}

bool canonical_less(const BarredTableau& a, const BarredTableau& b) { return a.entries < b.entries; }

namespace {

std::string entry_text(const Entry& e, bool unicode) {
    if (e.empty()) return ".";
    std::string s = std::to_string(e.value);
    if (e.barred) s += unicode ? "̄" : "~";
    return s;
}

std::string draw(const std::vector<std::vector<std::string>>& grid, int width) {
    std::string out;
    for (const auto& row : grid) {
        std::string line;
        for (const auto& cell : row) {
            std::string c = cell;
            line += c;
            // pad by visible width: combining marks take no column
            int visible = 0;
            for (unsigned char ch : c)
                if ((ch & 0xC0) != 0x80 && ch != 0xCC) ++visible;
            for (int k = visible; k < width; ++k) line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace

std::string render(const BarredTableau& B, bool unicode) {
    return render(SkewBarredTableau{Partition::zero(B.d()), B}, unicode);
}

std::string render(const SkewBarredTableau& L, bool unicode) {
    const auto& sh = *L.inner.shape;
    int mu_cols = sh.columns();
    int lam_cols = L.lambda.d() ? L.lambda[0] : 0;
    int lam_rows = 0;
    for (int i = 0; i < L.lambda.d(); ++i)
        if (L.lambda[i] > 0) lam_rows = i + 1;
    int mu_rows = 0;
    for (int r = 1; r <= sh.d(); ++r)
        if (sh.mu()[r - 1] > 0) mu_rows = r;
    int width = 3;
    std::vector<std::vector<std::string>> grid(static_cast<size_t>(lam_rows + mu_rows),
                                               std::vector<std::string>(static_cast<size_t>(mu_cols + lam_cols)));
    for (int i = 0; i < lam_rows; ++i)
        for (int j = 0; j < L.lambda[i]; ++j)
            grid[static_cast<size_t>(i)][static_cast<size_t>(mu_cols + j)] = std::to_string(i + 1);
    for (int idx = 0; idx < sh.size(); ++idx) {
        const Cell& cl = sh.cell(idx);
        int row = lam_rows + (mu_rows - cl.r);
        int col = mu_cols - cl.c;
        grid[static_cast<size_t>(row)][static_cast<size_t>(col)] = entry_text(L.inner[idx], unicode);
    }
    return draw(grid, width);
}

std::string render_inline(const BarredTableau& B) {
    const auto& sh = *B.shape;
    std::string s;
    bool first_row = true;
    for (int r = sh.d(); r >= 1; --r) {
        if (sh.mu()[r - 1] == sh.kappa()[r - 1]) continue;
        if (!first_row) s += " | ";
        first_row = false;
        bool first = true;
        for (int c = sh.mu()[r - 1]; c > sh.kappa()[r - 1]; --c) {
            if (!first) s += ' ';
            first = false;
            s += entry_text(B.at(r, c), false);
        }
    }
    return s;
}

}  // namespace eqlr::tableaux
