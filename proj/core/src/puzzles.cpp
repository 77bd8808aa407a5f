#include "eqlr/puzzles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

namespace eqlr::puzzles {

char piece_char(PieceKind k) {
    switch (k) {
        case PieceKind::zero: return '0';
        case PieceKind::one: return '1';
        case PieceKind::A: return 'A';
        case PieceKind::B: return 'B';
        case PieceKind::C: return 'C';
        case PieceKind::E: return 'E';
    }
    return '?';
}

Puzzle::Puzzle(int n, bool trapezoid) : n_(n), trap_(trapezoid) {
    if (n < 1) throw DomainError("puzzle side length must be positive");
    cover_.resize(static_cast<size_t>((n_ - bmin()) * n_ * 2));
}

bool Puzzle::has_triangle(const Tri& t) const {
    if (t.b < bmin() || t.b > n_ - 1 || t.a < 0 || t.a > n_ - 1) return false;
    if (t.b < 0) return true;
    return t.up ? t.a + t.b <= n_ - 1 : t.a + t.b <= n_ - 2;
}

std::size_t Puzzle::slot(const Tri& t) const {
    return static_cast<size_t>(((t.b - bmin()) * n_ + t.a) * 2 + (t.up ? 0 : 1));
}

std::vector<Tri> Puzzle::triangles() const {
    std::vector<Tri> out;
    for (int b = n_ - 1; b >= bmin(); --b)
        for (int a = 0; a < n_; ++a)
            for (bool up : {true, false})
                if (has_triangle({up, a, b})) out.push_back({up, a, b});
    return out;
}

std::vector<Tri> Puzzle::cells(const Placement& p) {
    switch (p.kind) {
        case PieceKind::zero:
        case PieceKind::one: return {{p.up, p.a, p.b}};
        case PieceKind::A: return {{true, p.a, p.b}, {false, p.a, p.b}};
        case PieceKind::B: return {{false, p.a - 1, p.b}, {true, p.a, p.b}};
        case PieceKind::C:
        case PieceKind::E: return {{true, p.a, p.b}, {false, p.a, p.b - 1}};
    }
    return {};
}

std::vector<Edge> Puzzle::edges(const Tri& t) {
    if (t.up) return {{EdgeDir::H, t.a, t.b}, {EdgeDir::NE, t.a, t.b}, {EdgeDir::NW, t.a, t.b}};
    return {{EdgeDir::H, t.a, t.b + 1}, {EdgeDir::NW, t.a, t.b}, {EdgeDir::NE, t.a + 1, t.b}};
}

int Puzzle::label_from(const Placement& p, const Tri&, const Edge& e) {
    switch (p.kind) {
        case PieceKind::zero: return 0;
        case PieceKind::one: return 1;
        case PieceKind::A: return e.dir == EdgeDir::H ? 1 : e.dir == EdgeDir::NE ? 0 : -1;
        case PieceKind::B: return e.dir == EdgeDir::H ? 0 : e.dir == EdgeDir::NW ? 1 : -1;
        case PieceKind::C: return e.dir == EdgeDir::NE ? 1 : e.dir == EdgeDir::NW ? 0 : -1;
        case PieceKind::E: return e.dir == EdgeDir::NE ? 0 : e.dir == EdgeDir::NW ? 1 : -1;
    }
    return -1;
}

namespace {

// The two triangles meeting along e (either may be outside the region).
std::pair<Tri, Tri> sides(const Edge& e) {
    switch (e.dir) {
        case EdgeDir::H: return {{true, e.a, e.b}, {false, e.a, e.b - 1}};
        case EdgeDir::NE: return {{true, e.a, e.b}, {false, e.a - 1, e.b}};
        case EdgeDir::NW: return {{true, e.a, e.b}, {false, e.a, e.b}};
    }
    return {};
}

}  // namespace

bool Puzzle::place(const Placement& p) {
    auto cs = cells(p);
    for (const auto& t : cs)
        if (!has_triangle(t) || cover_[slot(t)]) return false;
    for (const auto& t : cs) cover_[slot(t)] = p;
    return true;
}

void Puzzle::remove(const Placement& p) {
    for (const auto& t : cells(p))
        if (has_triangle(t) && cover_[slot(t)] == p) cover_[slot(t)].reset();
}

std::vector<Placement> Puzzle::placements() const {
    std::vector<Placement> out;
    for (const auto& t : triangles()) {
        const auto& c = at(t);
        if (c && cells(*c).front() == t) out.push_back(*c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Puzzle::complete() const {
    for (const auto& t : triangles())
        if (!at(t)) return false;
    return true;
}

int Puzzle::label(const Edge& e) const {
    auto [t1, t2] = sides(e);
    int l = -1;
    for (const Tri& t : {t1, t2}) {
        if (!has_triangle(t) || !at(t)) continue;
        int x = label_from(*at(t), t, e);
        if (x < 0) continue;
        if (l >= 0 && l != x) return -1;
        l = x;
    }
    return l;
}

bool Puzzle::consistent() const {
    for (const auto& t : triangles()) {
        if (!at(t)) continue;
        for (const auto& e : edges(t)) {
            auto [t1, t2] = sides(e);
            const Tri& o = (t1 == t) ? t2 : t1;
            if (!has_triangle(o) || !at(o)) continue;
            int x = label_from(*at(t), t, e), y = label_from(*at(o), o, e);
            if (x != y) return false;
        }
    }
    return true;
}

BoundaryWord Puzzle::ne() const {
    std::vector<int> bits;
    for (int k = 1; k <= n_; ++k) bits.push_back(label({EdgeDir::NW, k - 1, n_ - k}));
    return BoundaryWord(bits);
}

BoundaryWord Puzzle::nw() const {
    std::vector<int> bits;
    for (int b = 0; b < n_; ++b) bits.push_back(label({EdgeDir::NE, 0, b}));
    return BoundaryWord(bits);
}

BoundaryWord Puzzle::s() const {
    std::vector<int> bits;
    for (int a = 0; a < n_; ++a) bits.push_back(label({EdgeDir::H, a, bmin()}));
    return BoundaryWord(bits);
}

bool Puzzle::sides_zero() const {
    for (int b = bmin(); b < 0; ++b)
        if (label({EdgeDir::NE, 0, b}) != 0 || label({EdgeDir::NE, n_, b}) != 0) return false;
    return true;
}

std::string Puzzle::render() const {
    std::string out;
    for (int b = n_ - 1; b >= bmin(); --b) {
        std::string line(static_cast<size_t>(b - bmin()), ' ');
        for (int a = 0; a < n_; ++a) {
            for (bool up : {true, false}) {
                Tri t{up, a, b};
                if (!has_triangle(t)) continue;
                const auto& c = at(t);
                if (!c) {
                    line += '.';
                } else if (c->kind == PieceKind::zero || c->kind == PieceKind::one) {
                    line += piece_char(c->kind);
                } else {
                    line += c->kind == PieceKind::E ? 'E' : 'R';
                }
            }
        }
        out += line + "\n";
        if (b == 0 && trap_) out += std::string(static_cast<size_t>(-bmin()), ' ') + std::string(static_cast<size_t>(2 * n_ - 1), '-') + "\n";
    }
    return out;
}

namespace {

class Solver {
public:
    Solver(const Puzzle& start, const BoundaryWord& ne, const BoundaryWord& nw, const BoundaryWord& s,
           std::size_t limit)
        : P_(start), n_(start.n()), bmin_(start.bmin()), limit_(limit) {
        if (ne.n() != n_ || nw.n() != n_ || s.n() != n_) throw DomainError("boundary words must have length n");
        lab_.assign(static_cast<size_t>(3 * (n_ + 3) * (n_ - bmin_ + 3)), -1);
        std::vector<std::pair<Edge, int>> fixed;
        for (int k = 1; k <= n_; ++k) fixed.push_back({{EdgeDir::NW, k - 1, n_ - k}, ne[k - 1]});
        for (int b = 0; b < n_; ++b) fixed.push_back({{EdgeDir::NE, 0, b}, nw[b]});
        for (int a = 0; a < n_; ++a) fixed.push_back({{EdgeDir::H, a, bmin_}, s[a]});
        for (int b = bmin_; b < 0; ++b) {
            fixed.push_back({{EdgeDir::NE, 0, b}, 0});
            fixed.push_back({{EdgeDir::NE, n_, b}, 0});
        }
        std::vector<int> trail;
        ok_ = true;
        for (auto& [e, v] : fixed)
            if (!assign(e, v, trail)) ok_ = false;
        for (const auto& pl : start.placements()) {
            P_.remove(pl);
            if (!try_place(pl, trail)) ok_ = false;
        }
        order_ = P_.triangles();
        int acc = 0;
        for (int a = 0; a < n_; ++a) s_prefix_.push_back(acc += s[a]);
        for (int b = bmin_; b <= n_; ++b) {
            int r = 0;
            for (int k = 1; k <= n_; ++k)
                if (ne[k - 1] == 1 && n_ - k >= b) ++r;
            crossings_.push_back(r);
            std::vector<int> st(static_cast<size_t>(n_));
            for (int a = 0; a < n_; ++a)
                for (int k = a + 1; k <= n_; ++k)
                    if (ne[k - 1] == 1 && n_ - k >= b) ++st[static_cast<size_t>(a)];
            starts_.push_back(std::move(st));
        }
    }

    std::vector<Puzzle> run() {
        if (ok_) rec(0);
        return std::move(found_);
    }

private:
    std::size_t index(const Edge& e) const {
        return static_cast<size_t>(((e.b - bmin_ + 1) * (n_ + 3) + (e.a + 1)) * 3 + static_cast<int>(e.dir));
    }

    bool assign(const Edge& e, int v, std::vector<int>& trail) {
        int& cur = lab_[index(e)];
        if (cur == -1) {
            cur = v;
            trail.push_back(static_cast<int>(index(e)));
            return true;
        }
        return cur == v;
    }

    void undo(std::vector<int>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            lab_[static_cast<size_t>(trail.back())] = -1;
            trail.pop_back();
        }
    }

    bool try_place(const Placement& pl, std::vector<int>& trail) {
        std::size_t mark = trail.size();
        if (!P_.place(pl)) return false;
        for (const auto& t : Puzzle::cells(pl)) {
            for (const auto& e : Puzzle::edges(t)) {
                int v = Puzzle::label_from(pl, t, e);
                if (v >= 0 && !assign(e, v, trail)) {
                    undo(trail, mark);
                    P_.remove(pl);
                    return false;
                }
            }
        }
        return true;
    }

    // Paths from the NE side move only west or south, so the crossings of a horizontal line west of
    // any point never outnumber the ones of the S side west of it, and those east of it never
    // outnumber the path starts east of it.
    bool frontier_ok(std::size_t k) const {
        const Tri& t = order_[k];
        int row_start = t.up && t.a == 0;
        int done = 0, above = 0;
        for (int a = 0; a < n_; ++a) {
            bool low = t.up ? a < t.a : a <= t.a;
            int b = low ? t.b : t.b + 1;
            Tri u{true, a, b};
            bool e = P_.has_triangle(u) && P_.at(u) && P_.at(u)->kind == PieceKind::E;
            bool cross = lab_[index({EdgeDir::H, a, b})] == 1 || e;
            if (low) {
                done += cross;
                if (done > s_prefix_[static_cast<size_t>(a)]) return false;
            } else {
                above += cross;
            }
        }
        int east = 0;
        for (int a = n_ - 1; a >= 0; --a) {
            bool low = t.up ? a < t.a : a <= t.a;
            if (low) break;
            Tri u{true, a, t.b + 1};
            bool e = P_.has_triangle(u) && P_.at(u) && P_.at(u)->kind == PieceKind::E;
            east += lab_[index({EdgeDir::H, a, t.b + 1})] == 1 || e;
            if (east > starts_[static_cast<size_t>(t.b + 1 - bmin_)][static_cast<size_t>(a)]) return false;
        }
        if (row_start && above + done != crossings_[static_cast<size_t>(t.b + 1 - bmin_)]) return false;
        return true;
    }

    // The unfilled part depends on the filled part only through this frontier.
    std::string frontier_key(std::size_t k) const {
        const Tri& t = order_[k];
        std::string key;
        key.reserve(static_cast<size_t>(n_) + 6);
        key.push_back(static_cast<char>(k & 0xff));
        key.push_back(static_cast<char>(k >> 8));
        auto cover = [&](const Tri& u) {
            return P_.has_triangle(u) && P_.at(u) ? 3 * (1 + static_cast<int>(P_.at(u)->kind)) : 0;
        };
        for (int a = 0; a < n_; ++a) {
            bool done = t.up ? a < t.a : a <= t.a;
            int b = done ? t.b : t.b + 1;
            int v = lab_[index({EdgeDir::H, a, b})] + 1 + cover({false, a, b - 1});
            key.push_back(static_cast<char>(v));
        }
        Edge left = t.up ? Edge{EdgeDir::NE, t.a, t.b} : Edge{EdgeDir::NW, t.a, t.b};
        key.push_back(static_cast<char>(lab_[index(left)] + 1 + cover(t)));
        return key;
    }

    void rec(std::size_t k, bool keyed = false) {
        if (limit_ && found_.size() >= limit_) return;
        if (!keyed && k < order_.size()) {
            if (!frontier_ok(k)) return;
            auto key = frontier_key(k);
            if (dead_.count(key)) return;
            std::size_t before = found_.size();
            rec(k, true);
            if (found_.size() == before) dead_.insert(std::move(key));
            return;
        }
        if (k < order_.size() && P_.at(order_[k])) {
            rec(k + 1);
            return;
        }
        if (k == order_.size()) {
            found_.push_back(P_);
            return;
        }
        const Tri& t = order_[k];
        std::vector<Placement> options{{PieceKind::zero, t.up, t.a, t.b}, {PieceKind::one, t.up, t.a, t.b}};
        if (t.up) {
            options.push_back({PieceKind::A, true, t.a, t.b});
            options.push_back({PieceKind::C, true, t.a, t.b});
            options.push_back({PieceKind::E, true, t.a, t.b});
        } else {
            options.push_back({PieceKind::B, true, t.a + 1, t.b});
        }
        for (const auto& pl : options) {
            std::vector<int> trail;
            if (!try_place(pl, trail)) continue;
            rec(k + 1);
            undo(trail, 0);
            P_.remove(pl);
            if (limit_ && found_.size() >= limit_) return;
        }
    }

    Puzzle P_;
    int n_, bmin_;
    std::size_t limit_;
    bool ok_ = false;
    std::vector<int> lab_;
    std::vector<Tri> order_;
    std::vector<Puzzle> found_;
    std::unordered_set<std::string> dead_;
    std::vector<int> s_prefix_, crossings_;
    std::vector<std::vector<int>> starts_;  // NE starts at or east of a, in rows >= b
};

std::vector<Puzzle> enumerate_impl(const Partition& lambda, const Partition& mu, const Partition& nu, int n,
                                   bool trap) {
    if (lambda.d() != mu.d() || mu.d() != nu.d()) throw DomainError("lambda, mu, nu must have the same length d");
    weights::require_in_box(lambda, n, "lambda");
    weights::require_in_box(mu, n, "mu");
    weights::require_in_box(nu, n, "nu");
    Puzzle empty(n, trap);
    return Solver(empty, core::partition_to_word(lambda, n), core::partition_to_word(mu, n),
                  core::partition_to_word(nu, n), 0)
        .run();
}

}  // namespace

std::vector<Puzzle> enumerate_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
    return enumerate_impl(lambda, mu, nu, n, false);
}

std::vector<Puzzle> enumerate_trapezoid_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu,
                                                int n) {
    return enumerate_impl(lambda, mu, nu, n, true);
}

std::vector<Puzzle> complete_puzzle(const Puzzle& partial, const BoundaryWord& ne, const BoundaryWord& nw,
                                    const BoundaryWord& s, std::size_t limit) {
    return Solver(partial, ne, nw, s, limit).run();
}

PieceIndices closed_form_indices(int n, const Placement& p) { return {n - p.a, n - p.a - p.b}; }

PieceIndices march_indices(const Puzzle& P, const Placement& p) {
    if (p.kind != PieceKind::E) throw DomainError("only equivariant pieces carry indices");
    int n = P.n();
    // The middle edge H(a,b); walk parallel to the NW side, then parallel to the NE side, until b = 0.
    auto walk = [&](int da_down) {
        int a = p.a, b = p.b;
        while (b != 0) {
            if (b > 0) {
                a += da_down;
                --b;
            } else {
                a -= da_down;
                ++b;
            }
            if (a < 0 || a >= n) throw InvariantError("index ray left the puzzle");
        }
        return n - a;  // edges of the line b = 0 are numbered 1..n from the right
    };
    return {walk(0), walk(1)};
}

Weight puzzle_weight(const Puzzle& P, Family flavor) {
    std::vector<weights::WeightFactor> fs;
    int n = P.n();
    for (const auto& t : P.triangles()) {
        const auto& c = P.at(t);
        if (!c || c->kind != PieceKind::E || !t.up) continue;
        auto [e, f] = march_indices(P, *c);
        if (flavor == Family::y)
            fs.push_back({Family::y, e, f});
        else
            fs.push_back({Family::Y, n + 1 - f, n + 1 - e});
    }
    return weights::make_weight(std::move(fs));
}

SkewBarredTableau phi(const Puzzle& P) {
    int n = P.n();
    BoundaryWord ne = P.ne(), nw = P.nw();
    int d = ne.d();
    Partition lambda = core::word_to_partition(ne);
    Partition mu = core::word_to_partition(nw);
    if (mu.d() != d) throw InvariantError("NE and NW words have different numbers of ones");
    // rows[j-1][i-1]: value-i entries of row j, east to west (barred flags)
    std::vector<std::vector<std::vector<bool>>> rows(static_cast<size_t>(d),
                                                     std::vector<std::vector<bool>>(static_cast<size_t>(d)));
    auto piece = [&](const Tri& t) -> const Placement& {
        if (!P.has_triangle(t) || !P.at(t)) throw InvariantError("path runs off the puzzle");
        return *P.at(t);
    };
    int i = 0;
    for (int k = 1; k <= n; ++k) {
        if (ne[k - 1] != 1) continue;
        ++i;
        std::vector<std::vector<bool>> segs;
        std::vector<bool> seg;
        Tri cur{true, k - 1, n - k};
        for (bool done = false; !done;) {
            const Placement& pl = piece(cur);
            if (pl.kind == PieceKind::B) {
                seg.push_back(false);
                cur = {true, cur.a - 1, cur.b};
            } else if (pl.kind == PieceKind::E) {
                seg.push_back(true);
                cur = {true, cur.a, cur.b - 1};
            } else if (pl.kind == PieceKind::one) {
                segs.push_back(seg);
                seg.clear();
                int a = cur.a, b = cur.b;
                for (;;) {
                    if (b == P.bmin()) {
                        done = true;
                        break;
                    }
                    const Placement& below = piece({false, a, b - 1});
                    if (below.kind == PieceKind::one) {
                        cur = {true, a, b - 1};
                        break;
                    }
                    if (below.kind != PieceKind::A) throw InvariantError("path descends into a non-A piece");
                    --b;
                }
            } else {
                throw InvariantError("path meets a piece that does not carry it");
            }
        }
        if (static_cast<int>(segs.size()) != d - i + 1)
            throw InvariantError("path " + std::to_string(i) + " has the wrong number of segments");
        for (size_t s = 0; s < segs.size(); ++s) {
            int j = d - i + 1 - static_cast<int>(s);
            rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = segs[s];
        }
    }
    auto shape = tableaux::make_shape(mu);
    tableaux::BarredTableau B{shape, std::vector<tableaux::Entry>(static_cast<size_t>(shape->size()))};
    for (int j = 1; j <= d; ++j) {
        std::vector<tableaux::Entry> row;  // left to right
        for (int v = 1; v <= d; ++v) {
            const auto& s = rows[static_cast<size_t>(j - 1)][static_cast<size_t>(v - 1)];
            for (auto it = s.rbegin(); it != s.rend(); ++it) row.push_back({v, *it});
        }
        if (static_cast<int>(row.size()) != mu[j - 1]) throw InvariantError("row length does not match mu");
        for (int k = 0; k < mu[j - 1]; ++k) {
            int c = mu[j - 1] - k;
            B.entries[static_cast<size_t>(shape->index(j, c))] = row[static_cast<size_t>(k)];
        }
    }
    return {lambda, B};
}

Puzzle phi_inverse(const SkewBarredTableau& L, int n, bool trapezoid) {
    int d = L.d();
    const auto& sh = *L.inner.shape;
    if (sh.skew()) throw DomainError("puzzles need a straight shape");
    Partition lambda = L.lambda, mu = sh.mu();
    Partition nu(tableaux::unbarred_content(L).entries());
    weights::require_in_box(lambda, n, "lambda");
    weights::require_in_box(mu, n, "mu");
    weights::require_in_box(nu, n, "nu");
    // entries of value v in row j, east to west
    auto row_entries = [&](int j, int v) {
        std::vector<bool> out;
        for (int c = 1; c <= mu[j - 1]; ++c) {
            const auto& e = L.inner.at(j, c);
            if (e.value == v) out.push_back(e.barred);
        }
        return out;
    };
    auto at_least = [&](int j, int v) {
        int k = 0;
        for (int c = 1; c <= mu[j - 1]; ++c)
            if (L.inner.at(j, c).value >= v) ++k;
        return k;
    };
    Puzzle P(n, trapezoid);
    auto put = [&](const Placement& p) {
        if (!P.place(p)) throw DomainError("tableau has no puzzle of this kind");
    };
    BoundaryWord ne = core::partition_to_word(lambda, n);
    int i = 0;
    for (int k = 1; k <= n; ++k) {
        if (ne[k - 1] != 1) continue;
        ++i;
        int a = k - 1, b = n - k;
        for (int j = d - i + 1; j >= 1; --j) {
            for (bool barred : row_entries(j, i)) {
                if (barred) {
                    put({PieceKind::E, true, a, b});
                    --b;
                } else {
                    put({PieceKind::B, true, a, b});
                    --a;
                }
            }
            if (n - 1 - a - b != at_least(j, i) + (d + 1 - i - j))
                throw DomainError("tableau is not a Littlewood-Richardson tableau");
            put({PieceKind::one, true, a, b});
            if (j > 1) {
                auto next = row_entries(j - 1, i);
                int nb = static_cast<int>(std::count(next.begin(), next.end(), false));
                int nE = static_cast<int>(next.size()) - nb;
                int run = at_least(j - 1, i) + (d + 1 - i - (j - 1)) - (n - a - b + nb + nE);
                if (run < 0) throw DomainError("tableau is not a Littlewood-Richardson tableau");
                for (int t = 1; t <= run; ++t) put({PieceKind::A, true, a, b - t});
                put({PieceKind::one, false, a, b - run - 1});
                b = b - run - 1;
            } else {
                for (int bb = b - 1; bb >= P.bmin(); --bb) put({PieceKind::A, true, a, bb});
            }
        }
    }
    auto done = complete_puzzle(P, ne, core::partition_to_word(mu, n), core::partition_to_word(nu, n), 2);
    if (done.empty()) throw DomainError("tableau has no puzzle of this kind");
    if (done.size() > 1) throw InvariantError("puzzle completion is not unique");
    return done.front();
}

MPoly coefficient_by_puzzles(const Partition& lambda, const Partition& mu, const Partition& nu, int n, Family flavor,
                             bool trapezoid) {
    auto ps = trapezoid ? enumerate_trapezoid_puzzles(lambda, mu, nu, n) : enumerate_puzzles(lambda, mu, nu, n);
    std::vector<MPoly> parts;
    for (const auto& P : ps) parts.push_back(puzzle_weight(P, flavor).poly);
    return polyring::sum(std::move(parts));
}

}  // namespace eqlr::puzzles
