#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eqlr/polyring.hpp"
#include "eqlr/tableaux.hpp"

namespace eqlr::involutions {

using core::Composition;
using core::Partition;
using polyring::MPoly;
using tableaux::BarredTableau;
using tableaux::Shape;

enum class Hat : std::uint8_t { none, left, right };

struct HEntry {
    int value = 0;  // 0 = empty box
    Hat hat = Hat::none;
    bool empty() const { return value == 0; }
    friend bool operator==(const HEntry&, const HEntry&) = default;
    friend auto operator<=>(const HEntry&, const HEntry&) = default;
};

// Reverse hatted tableau; empty boxes allow restrictions such as H_{>j}.
struct HattedTableau {
    Shape shape;
    std::vector<HEntry> entries;  // reading order

    int d() const { return shape->d(); }
    const HEntry& operator[](int idx) const { return entries[static_cast<size_t>(idx)]; }
    bool is_valid() const;  // ignores hats; empty boxes are not allowed
    // Hats become bars.
    BarredTableau bar_projection() const;
    std::vector<int> unhatted_word() const;
    std::vector<int> unhatted_word_before(int idx) const;
    Composition unhatted_content() const;
    // Columns 1..j kept (le) or columns j+1.. kept (gt), other boxes emptied.
    HattedTableau columns_le(int j) const;
    HattedTableau columns_gt(int j) const;
    std::string str() const;  // rows from the top, "v" = left hat, "^" = right hat

    friend bool operator==(const HattedTableau& a, const HattedTableau& b) {
        return *a.shape == *b.shape && a.entries == b.entries;
    }
    friend bool operator<(const HattedTableau& a, const HattedTableau& b) { return a.entries < b.entries; }
};

std::vector<HattedTableau> enumerate_hatted(const Partition& mu, int d);
std::vector<HattedTableau> enumerate_hatted(const Partition& mu, const Partition& kappa, int d);
// All 2^k hattings of the barred entries of B.
std::vector<HattedTableau> hattings(const BarredTableau& B);

// e_{xi,H}(a) = (xi + omega(H^u_{<a}))_{|a|}, f_H(a) = |a|' + c(a) - r(a).
int e_index(const Composition& xi, const HattedTableau& H, int idx);
int f_index(const HattedTableau& H, int idx);
// prod_{left} y_e * prod_{right} (-y_f)
MPoly weight_d_xi_H(const Composition& xi, const HattedTableau& H);

enum class EntryClass : std::uint8_t { other, free, semi_free, locked };
std::vector<EntryClass> classify(const HattedTableau& H, int i);

// Cell index in H -> cell index in s_i H, for left- and right-hatted entries.
struct EntryMap {
    std::map<int, int> b_l;
    std::map<int, int> b_r;
};

struct SiResult {
    HattedTableau tableau;
    EntryMap map;
};

SiResult apply_s_i(const HattedTableau& H, int i);
// s_{w[0]} s_{w[1]} ... applied right to left.
HattedTableau apply_sigma(const std::vector<int>& word, const HattedTableau& H);

// Smallest j with lambda + omega(H^u_{<=j}) not a partition, or nullopt.
std::optional<int> bad_guy_column(const HattedTableau& H, const Partition& lambda);
bool is_bad_guy(const HattedTableau& H, const Partition& lambda);
// H* for a Bad Guy, nullopt otherwise. `swapped` receives the transposition index i.
std::optional<HattedTableau> bad_guy_star(const HattedTableau& H, const Partition& lambda, int* swapped = nullptr);

}  // namespace eqlr::involutions
