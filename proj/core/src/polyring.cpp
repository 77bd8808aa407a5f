#include "eqlr/polyring.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <unordered_map>

namespace eqlr::polyring {

namespace {

constexpr std::uint32_t kIndexBits = 20;
constexpr std::uint32_t kMaxIndex = (1u << kIndexBits) - 1;
constexpr std::uint32_t kMaxExp = 255;
// y may carry indices down to 1 - kOffset (skew shapes reach y_0, y_{-1}, ...).
constexpr int kOffset = 1024;

std::uint32_t key_of(std::uint32_t packed) { return packed >> 8; }
std::uint32_t exp_of(std::uint32_t packed) { return packed & 0xffu; }
Family family_of_key(std::uint32_t key) { return static_cast<Family>(key >> kIndexBits); }
int index_of_key(std::uint32_t key) { return static_cast<int>(key & kMaxIndex) - kOffset; }
std::uint32_t key_for(Family f, int index) {
    return (static_cast<std::uint32_t>(f) << kIndexBits) | static_cast<std::uint32_t>(index + kOffset);
}

std::uint32_t pack(std::uint32_t key, std::uint32_t exp) {
    if (exp > kMaxExp) throw DomainError("exponent too large for monomial encoding");
    return (key << 8) | exp;
}

std::string int_str(const Int& c) { return c.str(); }

}  // namespace

char family_char(Family f) {
    switch (f) {
        case Family::x: return 'x';
        case Family::y: return 'y';
        case Family::Y: return 'Y';
    }
    return '?';
}

std::string var_name(Family f, int index) {
    std::string s(1, family_char(f));
    return index >= 1 ? s + std::to_string(index) : s + "[" + std::to_string(index) + "]";
}

Monomial Monomial::var(Family f, int index, int exp) {
    int lowest = f == Family::y ? 1 - kOffset : 1;
    if (index < lowest || index + kOffset > static_cast<int>(kMaxIndex)) throw DomainError("variable index out of range");
    Monomial m;
    if (exp < 0) throw DomainError("negative exponent");
    if (exp == 0) return m;
    std::uint32_t key = key_for(f, index);
    m.packed_.push_back(pack(key, static_cast<std::uint32_t>(exp)));
    return m;
}

int Monomial::degree() const {
    int s = 0;
    for (auto p : packed_) s += static_cast<int>(exp_of(p));
    return s;
}

int Monomial::degree_in(Family f) const {
    int s = 0;
    for (auto p : packed_)
        if (family_of_key(key_of(p)) == f) s += static_cast<int>(exp_of(p));
    return s;
}

int Monomial::exponent(Family f, int index) const {
    std::uint32_t key = key_for(f, index);
    for (auto p : packed_)
        if (key_of(p) == key) return static_cast<int>(exp_of(p));
    return 0;
}

std::vector<Power> Monomial::powers() const {
    std::vector<Power> out;
    out.reserve(packed_.size());
    for (auto p : packed_) {
        auto k = key_of(p);
        out.push_back({family_of_key(k), index_of_key(k), static_cast<int>(exp_of(p))});
    }
    return out;
}

std::string Monomial::str() const {
    if (packed_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < packed_.size(); ++i) {
        if (i) s += '*';
        auto k = key_of(packed_[i]);
        s += var_name(family_of_key(k), index_of_key(k));
        if (exp_of(packed_[i]) != 1) s += "^" + std::to_string(exp_of(packed_[i]));
    }
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.packed_.reserve(a.packed_.size() + b.packed_.size());
    size_t i = 0, j = 0;
    while (i < a.packed_.size() && j < b.packed_.size()) {
        auto ka = key_of(a.packed_[i]), kb = key_of(b.packed_[j]);
        if (ka < kb) {
            m.packed_.push_back(a.packed_[i++]);
        } else if (kb < ka) {
            m.packed_.push_back(b.packed_[j++]);
        } else {
            m.packed_.push_back(pack(ka, exp_of(a.packed_[i]) + exp_of(b.packed_[j])));
            ++i;
            ++j;
        }
    }
    for (; i < a.packed_.size(); ++i) m.packed_.push_back(a.packed_[i]);
    for (; j < b.packed_.size(); ++j) m.packed_.push_back(b.packed_[j]);
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.packed_.begin(), a.packed_.end(), b.packed_.begin(),
                                                  b.packed_.end());
}

std::size_t Monomial::hash() const { return boost::hash_range(packed_.begin(), packed_.end()); }

// ---------------------------------------------------------------------------

MPoly::MPoly(Int c) {
    if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

MPoly MPoly::monomial(const Monomial& m, Int c) {
    MPoly p;
    if (c != 0) p.terms_.push_back({m, std::move(c)});
    return p;
}

MPoly MPoly::var(Family f, int index) { return monomial(Monomial::var(f, index)); }

MPoly MPoly::binomial(Family f, int e, int g) { return var(f, e) - var(f, g); }

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Int MPoly::constant_term() const {
    if (!terms_.empty() && terms_[0].mono.is_one()) return terms_[0].coeff;
    return 0;
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& t : terms_) deg = std::max(deg, t.mono.degree());
    return deg;
}

bool MPoly::has_family(Family f) const {
    for (const auto& t : terms_)
        if (t.mono.degree_in(f) > 0) return true;
    return false;
}

int MPoly::max_index(Family f) const {
    int m = 0;
    for (const auto& t : terms_)
        for (const auto& pw : t.mono.powers())
            if (pw.family == f) m = std::max(m, pw.index);
    return m;
}

MPoly MPoly::from_sorted(std::vector<Term> t) {
    MPoly p;
    p.terms_ = std::move(t);
    return p;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

void MPoly::add_scaled(const MPoly& o, int sign) {
    if (o.terms_.empty()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono < o.terms_[j].mono)) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].mono < terms_[i].mono) {
            Term t = o.terms_[j++];
            if (sign < 0) t.coeff = -t.coeff;
            out.push_back(std::move(t));
        } else {
            Int c = terms_[i].coeff;
            if (sign < 0)
                c -= o.terms_[j].coeff;
            else
                c += o.terms_[j].coeff;
            if (c != 0) out.push_back({std::move(terms_[i].mono), std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

MPoly& MPoly::operator+=(const MPoly& o) {
    add_scaled(o, +1);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    add_scaled(o, -1);
    return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return MPoly{};
    if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
    if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            auto [it, fresh] = acc.try_emplace(s.mono * t.mono);
            if (fresh)
                it->second = s.coeff * t.coeff;
            else
                it->second += s.coeff * t.coeff;
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.mono < y.mono; });
    return MPoly::from_sorted(std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MPoly MPoly::scaled(const Int& c) const {
    if (c == 0) return MPoly{};
    MPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

MPoly MPoly::times_monomial(const Monomial& m, const Int& c) const { return *this * MPoly::monomial(m, c); }

MPoly MPoly::pow(int k) const {
    if (k < 0) throw DomainError("negative power");
    MPoly r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
        int da = a->mono.degree(), db = b->mono.degree();
        if (da != db) return da > db;
        return b->mono < a->mono;
    });
    std::string s;
    bool first = true;
    for (const Term* t : order) {
        Int c = t->coeff;
        bool neg = c < 0;
        if (neg) c = -c;
        if (neg)
            s += '-';
        else if (!first)
            s += '+';
        first = false;
        if (t->mono.is_one()) {
            s += int_str(c);
        } else {
            if (c != 1) s += int_str(c) + "*";
            s += t->mono.str();
        }
    }
    return s;
}

std::string MPoly::serialize() const {
    std::string s;
    for (const auto& t : terms_) s += int_str(t.coeff) + ":" + t.mono.str() + ";";
    return s;
}

MPoly sum(std::vector<MPoly> parts) {
    if (parts.empty()) return MPoly{};
    while (parts.size() > 1) {
        std::vector<MPoly> next;
        next.reserve((parts.size() + 1) / 2);
        for (size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2) next.push_back(std::move(parts.back()));
        parts = std::move(next);
    }
    return std::move(parts[0]);
}

MPoly substitute(const MPoly& p, const std::function<MPoly(Family, int)>& sub) {
    std::map<std::pair<int, int>, std::vector<MPoly>> powers;  // cached powers per variable
    auto power_of = [&](Family f, int idx, int e) -> const MPoly& {
        auto& v = powers[{static_cast<int>(f), idx}];
        if (v.empty()) {
            v.push_back(MPoly(1));
            v.push_back(sub(f, idx));
        }
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * v[1]);
        return v[static_cast<size_t>(e)];
    };
    std::vector<MPoly> parts;
    for (const auto& t : p.terms()) {
        MPoly term(t.coeff);
        for (const auto& pw : t.mono.powers()) term *= power_of(pw.family, pw.index, pw.exp);
        parts.push_back(std::move(term));
    }
    return sum(std::move(parts));
}

MPoly specialize_y_to_Y(const MPoly& p, int n) {
    if (p.has_family(Family::x)) throw DomainError("specialize_y_to_Y: polynomial contains x-variables");
    return substitute(p, [n](Family f, int idx) -> MPoly {
        if (f != Family::y) return MPoly::var(f, idx);
        if (idx > n) return MPoly{};
        if (idx < 1) throw DomainError("specialize_y_to_Y: y index below 1");
        return -MPoly::Y(n + 1 - idx);
    });
}

bool XLeadingFirst::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int v : a) da += v;
    for (int v : b) db += v;
    if (da != db) return da > db;
    return b < a;
}

namespace {

std::vector<int> x_exponents(const Monomial& m, int d) {
    std::vector<int> e(static_cast<size_t>(d), 0);
    for (const auto& pw : m.powers())
        if (pw.family == Family::x) {
            if (pw.index > d) throw DomainError("x index exceeds the declared number of x variables");
            e[static_cast<size_t>(pw.index - 1)] = pw.exp;
        }
    return e;
}

Monomial strip_x(const Monomial& m) {
    Monomial r;
    for (const auto& pw : m.powers())
        if (pw.family != Family::x) r = r * Monomial::var(pw.family, pw.index, pw.exp);
    return r;
}

}  // namespace

XGraded group_by_x(const MPoly& p, int d) {
    std::map<std::vector<int>, std::vector<Term>, XLeadingFirst> buckets;
    for (const auto& t : p.terms()) buckets[x_exponents(t.mono, d)].push_back({strip_x(t.mono), t.coeff});
    XGraded g;
    for (auto& [e, ts] : buckets) {
        std::vector<MPoly> parts;
        for (auto& t : ts) parts.push_back(MPoly::monomial(t.mono, t.coeff));
        g.emplace(e, sum(std::move(parts)));
    }
    return g;
}

MPoly ungroup(const XGraded& g) {
    std::vector<MPoly> parts;
    for (const auto& [e, c] : g) {
        Monomial m;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) m = m * Monomial::var(Family::x, static_cast<int>(i) + 1, e[i]);
        parts.push_back(c.times_monomial(m, 1));
    }
    return sum(std::move(parts));
}

std::pair<std::vector<int>, MPoly> x_degree_leading_term(const MPoly& p, int d) {
    if (p.is_zero()) throw DomainError("x_degree_leading_term of the zero polynomial");
    if (d == 0) d = p.max_index(Family::x);
    XGraded g = group_by_x(p, d);
    return *g.begin();
}

namespace {

MPoly det_rec(const PolyMatrix& m, std::vector<int>& cols, int row) {
    int k = static_cast<int>(cols.size());
    if (k == 0) return MPoly(1);
    if (k == 1) return m[static_cast<size_t>(row)][static_cast<size_t>(cols[0])];
    std::vector<MPoly> parts;
    for (int j = 0; j < k; ++j) {
        const MPoly& a = m[static_cast<size_t>(row)][static_cast<size_t>(cols[static_cast<size_t>(j)])];
        if (a.is_zero()) continue;
        int c = cols[static_cast<size_t>(j)];
        cols.erase(cols.begin() + j);
        MPoly minor = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + j, c);
        MPoly term = a * minor;
        parts.push_back(j % 2 ? -term : term);
    }
    return sum(std::move(parts));
}

}  // namespace

MPoly determinant(const PolyMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
    std::vector<int> cols(m.size());
    for (size_t i = 0; i < m.size(); ++i) cols[i] = static_cast<int>(i);
    return det_rec(m, cols, 0);
}

std::string render_pretty(const MPoly& p) {
    std::vector<std::pair<Family, int>> pos, neg;
    for (const auto& t : p.terms()) {
        auto pw = t.mono.powers();
        if (pw.size() != 1 || pw[0].exp != 1 || (t.coeff != 1 && t.coeff != -1)) return p.str();
        (t.coeff > 0 ? pos : neg).push_back({pw[0].family, pw[0].index});
    }
    if (pos.empty() || pos.size() != neg.size()) return p.str();
    for (const auto& v : pos)
        if (v.first != pos[0].first) return p.str();
    for (const auto& v : neg)
        if (v.first != pos[0].first) return p.str();
    bool up = pos[0].first == Family::Y;
    std::sort(pos.begin(), pos.end(), [up](auto a, auto b) { return up ? a.second < b.second : a.second > b.second; });
    std::sort(neg.begin(), neg.end(), [](auto a, auto b) { return a.second < b.second; });
    std::string s;
    Family f = pos[0].first;
    for (size_t i = 0; i < pos.size(); ++i) {
        if (i) s += '+';
        s += "(" + var_name(f, pos[i].second) + "-" + var_name(f, neg[i].second) + ")";
    }
    return s;
}

}  // namespace eqlr::polyring
