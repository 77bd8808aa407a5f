#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "eqlr/core.hpp"

namespace eqlr::tableaux {

using core::Composition;
using core::Partition;

// Row r counts 1..d from the bottom, column c counts from the right.
struct Cell {
    int r;
    int c;
    friend bool operator==(const Cell&, const Cell&) = default;
};

// Right- and bottom-justified diagram of mu, optionally with the boxes of kappa removed.
// Row r occupies columns kappa_r+1 .. mu_r.
class ReverseDiagram {
public:
    ReverseDiagram(Partition mu, Partition kappa);
    explicit ReverseDiagram(Partition mu);

    int d() const { return mu_.d(); }
    const Partition& mu() const { return mu_; }
    const Partition& kappa() const { return kappa_; }
    bool skew() const { return kappa_.size() > 0; }

    int size() const { return static_cast<int>(cells_.size()); }
    // Reading order: columns right to left, each column top to bottom.
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(int idx) const { return cells_[static_cast<size_t>(idx)]; }
    int index(int r, int c) const;  // -1 when (r,c) is not a box
    bool contains(int r, int c) const { return index(r, c) >= 0; }
    int above(int idx) const { return index(cell(idx).r + 1, cell(idx).c); }
    int below(int idx) const { return index(cell(idx).r - 1, cell(idx).c); }
    int left(int idx) const { return index(cell(idx).r, cell(idx).c + 1); }
    int right(int idx) const { return index(cell(idx).r, cell(idx).c - 1); }
    int columns() const { return d() ? mu_[0] : 0; }
    // Reading-order index range [first, last) of column c.
    std::pair<int, int> column_range(int c) const;

    friend bool operator==(const ReverseDiagram& a, const ReverseDiagram& b) {
        return a.mu_ == b.mu_ && a.kappa_ == b.kappa_;
    }

private:
    Partition mu_, kappa_;
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> index_;  // [r-1][c-1]
    std::vector<int> col_start_;
};

using Shape = std::shared_ptr<const ReverseDiagram>;
Shape make_shape(const Partition& mu, const Partition& kappa);
Shape make_shape(const Partition& mu);

// Value 0 marks an empty box (only in sub-tableaux).
struct Entry {
    int value = 0;
    bool barred = false;
    bool empty() const { return value == 0; }
    friend bool operator==(const Entry&, const Entry&) = default;
    friend auto operator<=>(const Entry&, const Entry&) = default;
};

// Reverse barred tableau; also used for reverse tableaux (no bars) and for sub-tableaux (empty boxes).
struct BarredTableau {
    Shape shape;
    std::vector<Entry> entries;  // reading order

    int d() const { return shape->d(); }
    const Entry& at(int r, int c) const;
    const Entry& operator[](int idx) const { return entries[static_cast<size_t>(idx)]; }
    int num_barred() const;
    bool has_bars() const { return num_barred() > 0; }
    // Rows weakly increase left to right, columns strictly increase top to bottom, values in 1..d.
    bool is_valid() const;
    // Unbarred entries in reading order, skipping bars and empty boxes.
    std::vector<int> unbarred_word() const;
    // Same, stopping before idx.
    std::vector<int> unbarred_word_before(int idx) const;
    BarredTableau unbarred_copy() const;  // B~

    friend bool operator==(const BarredTableau& a, const BarredTableau& b) {
        return *a.shape == *b.shape && a.entries == b.entries;
    }
};

// L = lambda * B. The lambda part is implicit: its row i holds lambda_i unbarred i's.
struct SkewBarredTableau {
    Partition lambda;
    BarredTableau inner;

    int d() const { return inner.d(); }
    friend bool operator==(const SkewBarredTableau&, const SkewBarredTableau&) = default;
};

// Column word of the Young diagram of lambda, read right to left, each column top to bottom.
std::vector<int> lambda_word(const Partition& lambda);

std::vector<int> unbarred_column_word(const SkewBarredTableau& L);
// L^u_{<a}
std::vector<int> word_prefix_before(const SkewBarredTableau& L, int idx);
// omega(L^u) = lambda + omega(B^u)
Composition unbarred_content(const SkewBarredTableau& L);

std::vector<BarredTableau> enumerate_reverse_tableaux(const Partition& mu, int d);
std::vector<BarredTableau> enumerate_reverse_tableaux(const Partition& mu, const Partition& kappa, int d);
std::vector<BarredTableau> enumerate_barred_tableaux(const Partition& mu, int d);
std::vector<BarredTableau> enumerate_barred_tableaux(const Partition& mu, const Partition& kappa, int d);

// LR_{lambda,mu}^nu (nu given) or the union over all nu (nu empty optional).
std::vector<SkewBarredTableau> enumerate_lr_tableaux(const Partition& lambda, const Partition& mu,
                                                     const Partition& kappa, const Partition& nu);
std::vector<SkewBarredTableau> enumerate_lr_tableaux(const Partition& lambda, const Partition& mu,
                                                     const Partition& nu);
std::vector<SkewBarredTableau> enumerate_lr_tableaux_all(const Partition& lambda, const Partition& mu,
                                                         const Partition& kappa);

// Reading-order lexicographic key on (value, bar).
bool canonical_less(const BarredTableau& a, const BarredTableau& b);

// Text picture in the usual layout; bars as a trailing '~' (or a combining overline with unicode).
std::string render(const BarredTableau& B, bool unicode = false);
std::string render(const SkewBarredTableau& L, bool unicode = false);
// One line, rows from the top: "1 1 | 2 2 3~ 3~".
std::string render_inline(const BarredTableau& B);

}  // namespace eqlr::tableaux
