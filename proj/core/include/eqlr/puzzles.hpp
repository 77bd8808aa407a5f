#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqlr/core.hpp"
#include "eqlr/polyring.hpp"
#include "eqlr/tableaux.hpp"
#include "eqlr/weights.hpp"

namespace eqlr::puzzles {

using core::BoundaryWord;
using core::Partition;
using polyring::Family;
using polyring::MPoly;
using tableaux::SkewBarredTableau;
using weights::Weight;

// Lattice point (a, b) sits at a*e1 + b*e2, e1 pointing east and e2 at 60 degrees.
// U(a,b): corners (a,b), (a+1,b), (a,b+1); bottom H(a,b), left /(a,b), right \(a,b).
// D(a,b): corners (a+1,b), (a,b+1), (a+1,b+1); top H(a,b+1), left \(a,b), right /(a+1,b).
// H(a,b) joins (a,b)-(a+1,b), /(a,b) joins (a,b)-(a,b+1), \(a,b) joins (a+1,b)-(a,b+1).
enum class EdgeDir : std::uint8_t { H, NE, NW };  // H, "/", "\"

struct Edge {
    EdgeDir dir;
    int a;
    int b;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Tri {
    bool up;
    int a;
    int b;
    friend bool operator==(const Tri&, const Tri&) = default;
};

// zero/one: single triangles with constant labels.
// A = U(a,b)+D(a,b): H edges 1, "/" edges 0.
// B = D(a-1,b)+U(a,b): H edges 0, "\" edges 1.
// C = U(a,b)+D(a,b-1): "/" edges 1, "\" edges 0.
// E = U(a,b)+D(a,b-1): "/" edges 0, "\" edges 1; the equivariant piece.
enum class PieceKind : std::uint8_t { zero, one, A, B, C, E };
char piece_char(PieceKind k);

// Triangles are anchored at themselves, rhombi at their U half.
struct Placement {
    PieceKind kind;
    bool up;  // orientation of a single triangle; true for rhombi
    int a;
    int b;
    friend bool operator==(const Placement&, const Placement&) = default;
    friend auto operator<=>(const Placement&, const Placement&) = default;
};

// A side-n triangle, or (trapezoid) the triangle over the side-n rhombus of rows b = -1 .. -n.
class Puzzle {
public:
    Puzzle(int n, bool trapezoid);

    int n() const { return n_; }
    bool trapezoid() const { return trap_; }
    int bmin() const { return trap_ ? -n_ : 0; }
    bool has_triangle(const Tri& t) const;
    std::vector<Tri> triangles() const;  // scan order: rows from the top, west to east

    // Placement covering t, or nullopt.
    const std::optional<Placement>& at(const Tri& t) const { return cover_[slot(t)]; }
    // Places p; false (and no change) if a triangle is missing or already covered.
    bool place(const Placement& p);
    void remove(const Placement& p);
    std::vector<Placement> placements() const;  // sorted
    bool complete() const;

    // Label of an edge given by the piece on side `t` of it, or -1.
    static int label_from(const Placement& p, const Tri& t, const Edge& e);
    int label(const Edge& e) const;  // -1 if no adjacent piece fixes it or pieces disagree
    // Every edge between two covered triangles carries equal labels from both sides.
    bool consistent() const;

    BoundaryWord ne() const;  // \(k-1, n-k), k = 1..n
    BoundaryWord nw() const;  // /(0, b), b = 0..n-1
    BoundaryWord s() const;   // H(a, bmin), a = 0..n-1
    bool sides_zero() const;  // trapezoid east and west sides

    // Triangles of the piece.
    static std::vector<Tri> cells(const Placement& p);
    static std::vector<Edge> edges(const Tri& t);  // bottom/top, left, right

    std::string render() const;
    friend bool operator==(const Puzzle& x, const Puzzle& y) {
        return x.n_ == y.n_ && x.trap_ == y.trap_ && x.placements() == y.placements();
    }

private:
    std::size_t slot(const Tri& t) const;
    int n_;
    bool trap_;
    std::vector<std::optional<Placement>> cover_;
};

// All puzzles (or trapezoid puzzles) with boundary words of lambda (NE), mu (NW), nu (S).
std::vector<Puzzle> enumerate_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu, int n);
std::vector<Puzzle> enumerate_trapezoid_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu,
                                                int n);
// Completions of a partial tiling with the given boundary; used by phi_inverse.
std::vector<Puzzle> complete_puzzle(const Puzzle& partial, const BoundaryWord& ne, const BoundaryWord& nw,
                                    const BoundaryWord& s, std::size_t limit = 0);

// Indices of an equivariant piece anchored at (a, b), found by walking to the line b = 0.
struct PieceIndices {
    int e;
    int f;
};
PieceIndices march_indices(const Puzzle& P, const Placement& p);
PieceIndices closed_form_indices(int n, const Placement& p);

// Factors in scan order of the equivariant pieces.
Weight puzzle_weight(const Puzzle& P, Family flavor = Family::y);

SkewBarredTableau phi(const Puzzle& P);
Puzzle phi_inverse(const SkewBarredTableau& L, int n, bool trapezoid);

MPoly coefficient_by_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                             Family flavor = Family::y, bool trapezoid = false);

}  // namespace eqlr::puzzles
