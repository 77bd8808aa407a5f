#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqlr {

// Bad input: shapes outside their domain, malformed words, unknown options.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A property that must hold by construction did not.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace core {

// Weakly decreasing, fixed length d (trailing zeros kept).
// Indexing is 0-based: parts()[0] is the first part.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition zero(int d) { return Partition(std::vector<int>(static_cast<size_t>(d), 0)); }

    int d() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // |p|
    bool in_box(int n) const { return d() == 0 || parts_[0] <= n - d(); }
    bool contains(const Partition& other) const;  // other ⊆ this, same d
    Partition padded(int d) const;
    std::string str() const;  // "3,2,0"

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Arbitrary length-d vector of nonnegative integers.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> entries);
    static Composition zero(int d) { return Composition(std::vector<int>(static_cast<size_t>(d), 0)); }

    int d() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    int& at(int i) { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }
    bool is_partition() const;
    Composition swapped(int i) const;  // σ_i acting on 1-based positions i, i+1
    std::string str() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> e_;
};

Composition operator+(const Composition& a, const Composition& b);
Composition operator+(const Partition& a, const Composition& b);

// n-digit binary word; bits()[0] is the leftmost printed digit.
class BoundaryWord {
public:
    BoundaryWord() = default;
    explicit BoundaryWord(std::vector<int> bits);
    static BoundaryWord parse(std::string_view s);

    int n() const { return static_cast<int>(bits_.size()); }
    int d() const;
    int operator[](int k) const { return bits_[static_cast<size_t>(k)]; }
    const std::vector<int>& bits() const { return bits_; }
    std::string str() const;

    auto operator<=>(const BoundaryWord&) const = default;

private:
    std::vector<int> bits_;
};

inline int primed(int m, int d) { return d + 1 - m; }

Partition rho(int d);
Composition ones(int d);

// Multiplicity of each value 1..d.
Composition content(std::span<const int> seq, int d);
bool is_yamanouchi(std::span<const int> seq);

Partition word_to_partition(const BoundaryWord& w);
BoundaryWord partition_to_word(const Partition& p, int n);

// Length of the result is p[0].
Partition conjugate(const Partition& p);

// Parse "3,2,1" (empty string or "-" means the empty partition), pad to d.
Partition parse_partition(std::string_view text, int d);
std::vector<int> parse_int_list(std::string_view text);

// All partitions with at most d parts, each part at most m, in lex order.
std::vector<Partition> partitions_in_box(int d, int m);
// All partitions of length d contained in `outer`.
std::vector<Partition> partitions_inside(const Partition& outer);

}  // namespace core
}  // namespace eqlr
