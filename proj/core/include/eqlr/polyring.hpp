#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqlr/core.hpp"

namespace eqlr::polyring {

using Int = boost::multiprecision::cpp_int;

enum class Family : std::uint8_t { x = 0, y = 1, Y = 2 };

char family_char(Family f);
// "y3"; indices below 1 (y only) print as "y[0]", "y[-1]".
std::string var_name(Family f, int index);

struct Power {
    Family family;
    int index;
    int exp;
};

// Product of variable powers, kept sorted by (family, index).
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Family f, int index, int exp = 1);

    bool is_one() const { return packed_.empty(); }
    int degree() const;
    int degree_in(Family f) const;
    int exponent(Family f, int index) const;
    std::vector<Power> powers() const;
    std::size_t size() const { return packed_.size(); }
    std::string str() const;  // "x1^2*y3", "1" for the empty monomial

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

private:
    // key = family<<20 | (index + offset), entry = key<<8 | exp
    boost::container::small_vector<std::uint32_t, 6> packed_;
    friend class MPoly;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial mono;
    Int coeff;
};

// Sparse polynomial with integer coefficients in x_i, y_i, Y_i (i >= 1; y_i also for i <= 0).
// Terms are stored in canonical (ascending monomial) order without zero coefficients.
class MPoly {
public:
    MPoly() = default;
    MPoly(Int c);  // NOLINT: constants convert implicitly
    MPoly(int c) : MPoly(Int(c)) {}
    static MPoly monomial(const Monomial& m, Int c = 1);
    static MPoly var(Family f, int index);
    static MPoly x(int i) { return var(Family::x, i); }
    static MPoly y(int i) { return var(Family::y, i); }
    static MPoly Y(int i) { return var(Family::Y, i); }
    // fam_e - fam_f
    static MPoly binomial(Family f, int e, int g);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Int constant_term() const;
    int total_degree() const;  // -1 for zero
    bool has_family(Family f) const;
    int max_index(Family f) const;  // 0 if absent

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b);

    MPoly scaled(const Int& c) const;
    MPoly times_monomial(const Monomial& m, const Int& c) const;
    MPoly pow(int k) const;

    // Canonical expanded text: degree descending, then monomial descending.
    std::string str() const;
    // Byte string that is equal for equal polynomials.
    std::string serialize() const;

private:
    static MPoly from_sorted(std::vector<Term> t);
    void add_scaled(const MPoly& o, int sign);
    std::vector<Term> terms_;
};

// Sum of a list of polynomials (balanced reduction).
MPoly sum(std::vector<MPoly> parts);

// Replace each variable by the polynomial `sub` returns for it.
MPoly substitute(const MPoly& p, const std::function<MPoly(Family, int)>& sub);

// y_i -> -Y_{n+1-i} for i <= n, y_i -> 0 for i > n. Throws DomainError if x appears.
MPoly specialize_y_to_Y(const MPoly& p, int n);

// Leading x-monomial for the order: total x-degree descending, then lex with x_1 > x_2 > ...
// `d` fixes the length of the exponent vector (0 = max x index present).
std::pair<std::vector<int>, MPoly> x_degree_leading_term(const MPoly& p, int d = 0);

// Order used by x_degree_leading_term; "less" means "comes first", i.e. is larger.
struct XLeadingFirst {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Polynomial viewed as a polynomial in x with coefficients free of x.
using XGraded = std::map<std::vector<int>, MPoly, XLeadingFirst>;
XGraded group_by_x(const MPoly& p, int d);
MPoly ungroup(const XGraded& g);

using PolyMatrix = std::vector<std::vector<MPoly>>;
MPoly determinant(const PolyMatrix& m);

// Paired rendering for linear forms such as y6+y4-y2-y1 -> "(y6-y1)+(y4-y2)".
// Negative indices ascend; positive indices descend for y and ascend for Y ("(Y5-Y1)+(Y6-Y3)").
// Anything else falls back to MPoly::str().
std::string render_pretty(const MPoly& p);

}  // namespace eqlr::polyring
