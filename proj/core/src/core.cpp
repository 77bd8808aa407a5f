#include "eqlr/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace eqlr::core {

namespace {

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw DomainError("partition has a negative part: " + join(parts_));
        if (i && parts_[i] > parts_[i - 1])
            throw DomainError("partition is not weakly decreasing: " + join(parts_));
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
    if (other.d() != d()) return false;
    for (int i = 0; i < d(); ++i)
        if (other[i] > (*this)[i]) return false;
    return true;
}

Partition Partition::padded(int d) const {
    std::vector<int> p = parts_;
    while (static_cast<int>(p.size()) > d) {
        if (p.back() != 0) throw DomainError("partition " + str() + " has more than " + std::to_string(d) + " parts");
        p.pop_back();
    }
    p.resize(static_cast<size_t>(d), 0);
    return Partition(std::move(p));
}

std::string Partition::str() const { return join(parts_); }

Composition::Composition(std::vector<int> entries) : e_(std::move(entries)) {
    for (int x : e_)
        if (x < 0) throw DomainError("composition has a negative entry: " + join(e_));
}

bool Composition::is_partition() const { return std::is_sorted(e_.rbegin(), e_.rend()); }

Composition Composition::swapped(int i) const {
    if (i < 1 || i >= d()) throw DomainError("transposition index out of range");
    Composition c = *this;
    std::swap(c.e_[static_cast<size_t>(i - 1)], c.e_[static_cast<size_t>(i)]);
    return c;
}

std::string Composition::str() const { return join(e_); }

Composition operator+(const Composition& a, const Composition& b) {
    if (a.d() != b.d()) throw DomainError("length mismatch in composition sum");
    std::vector<int> r(static_cast<size_t>(a.d()));
    for (int i = 0; i < a.d(); ++i) r[static_cast<size_t>(i)] = a[i] + b[i];
    return Composition(std::move(r));
}

Composition operator+(const Partition& a, const Composition& b) { return Composition(a.parts()) + b; }

BoundaryWord::BoundaryWord(std::vector<int> bits) : bits_(std::move(bits)) {
    for (int b : bits_)
        if (b != 0 && b != 1) throw DomainError("boundary word digits must be 0 or 1");
}

BoundaryWord BoundaryWord::parse(std::string_view s) {
    std::vector<int> bits;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw DomainError("boundary word must consist of 0 and 1: " + std::string(s));
        bits.push_back(ch - '0');
    }
    return BoundaryWord(std::move(bits));
}

int BoundaryWord::d() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::string BoundaryWord::str() const {
    std::string s;
    for (int b : bits_) s += static_cast<char>('0' + b);
    return s;
}

Partition rho(int d) {
    std::vector<int> r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = d - 1 - i;
    return Partition(std::move(r));
}

Composition ones(int d) { return Composition(std::vector<int>(static_cast<size_t>(d), 1)); }

Composition content(std::span<const int> seq, int d) {
    std::vector<int> w(static_cast<size_t>(d), 0);
    for (int v : seq) {
        if (v < 1 || v > d)
            throw DomainError("value " + std::to_string(v) + " outside 1.." + std::to_string(d));
        ++w[static_cast<size_t>(v - 1)];
    }
    return Composition(std::move(w));
}

bool is_yamanouchi(std::span<const int> seq) {
    std::vector<int> cnt;
    for (int v : seq) {
        if (v < 1) throw DomainError("word values must be positive");
        if (static_cast<int>(cnt.size()) < v) cnt.resize(static_cast<size_t>(v), 0);
        ++cnt[static_cast<size_t>(v - 1)];
        if (v > 1 && cnt[static_cast<size_t>(v - 1)] > cnt[static_cast<size_t>(v - 2)]) return false;
    }
    return true;
}

Partition word_to_partition(const BoundaryWord& w) {
    std::vector<int> parts;
    int zeros_right = 0;
    for (int k = w.n() - 1; k >= 0; --k) {
        if (w[k] == 0)
            ++zeros_right;
        else
            parts.push_back(zeros_right);
    }
    std::reverse(parts.begin(), parts.end());
    return Partition(std::move(parts));
}

BoundaryWord partition_to_word(const Partition& p, int n) {
    int d = p.d();
    if (d > n || !p.in_box(n))
        throw DomainError("partition " + p.str() + " is not in P_{" + std::to_string(d) + "," + std::to_string(n) + "}");
    // The j-th one sits after (n-d) - p_j zeros.
    std::vector<int> bits;
    int placed_zeros = 0;
    for (int j = 0; j < d; ++j) {
        int want = (n - d) - p[j];
        while (placed_zeros < want) {
            bits.push_back(0);
            ++placed_zeros;
        }
        bits.push_back(1);
    }
    while (placed_zeros < n - d) {
        bits.push_back(0);
        ++placed_zeros;
    }
    return BoundaryWord(std::move(bits));
}

Partition conjugate(const Partition& p) {
    int m = p.d() ? p[0] : 0;
    std::vector<int> c(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < p.d(); ++i)
            if (p[i] > j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty() || text == "-" || text == "()" ) return out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw DomainError("cannot parse integer at position " + std::to_string(pos) + " in '" + std::string(text) + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

Partition parse_partition(std::string_view text, int d) { return Partition(parse_int_list(text)).padded(d); }

std::vector<Partition> partitions_in_box(int d, int m) {
    return partitions_inside(Partition(std::vector<int>(static_cast<size_t>(d), m)));
}

std::vector<Partition> partitions_inside(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<size_t>(outer.d()), 0);
    auto rec = [&](auto&& self, int i, int bound) -> void {
        if (i == outer.d()) {
            out.emplace_back(cur);
            return;
        }
        for (int v = 0; v <= std::min(bound, outer[i]); ++v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, outer.d() ? outer[0] : 0);
    return out;
}

}  // namespace eqlr::core
