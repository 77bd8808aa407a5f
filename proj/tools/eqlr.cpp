// eqlr: equivariant Littlewood-Richardson coefficients from the command line.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqlr/core.hpp"
#include "eqlr/parallel.hpp"
#include "eqlr/polyring.hpp"
#include "eqlr/puzzles.hpp"
#include "eqlr/schur.hpp"
#include "eqlr/tableaux.hpp"
#include "eqlr/weights.hpp"
#include "verify.hpp"

using namespace eqlr;
using core::Partition;
using nlohmann::json;
using polyring::Family;
using polyring::MPoly;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, invariant = 3 };

struct Request {
    int d = 0;
    int n = 0;
    std::string lambda, mu, nu, kappa;
    std::string method = "tableaux";
    std::string flavor = "y";
    bool positive_only = false;
    std::string format = "text";
    std::string suite;
    std::string max_shape;
    std::uint64_t seed = 1;
    int threads = 0;
};

struct Shapes {
    int d;
    Partition lambda, mu, kappa;
    std::optional<Partition> nu;
};

struct UsageError : DomainError {
    using DomainError::DomainError;
};

Shapes parse_shapes(const Request& r, bool need_nu) {
    int d = r.d;
    if (d == 0) {
        for (const auto* s : {&r.lambda, &r.mu, &r.nu, &r.kappa})
            d = std::max(d, static_cast<int>(core::parse_int_list(*s).size()));
        d = std::max(d, 1);
    }
    if (d < 1) throw UsageError("-d must be positive");
    Shapes s{d, core::parse_partition(r.lambda, d), core::parse_partition(r.mu, d), core::parse_partition(r.kappa, d),
             std::nullopt};
    if (!r.nu.empty()) s.nu = core::parse_partition(r.nu, d);
    if (need_nu && !s.nu) throw UsageError("--nu is required");
    if (!s.mu.contains(s.kappa)) throw DomainError("--kappa must lie inside --mu");
    if (r.n > 0) {
        weights::require_in_box(s.lambda, r.n, "lambda");
        weights::require_in_box(s.mu, r.n, "mu");
        if (s.nu) weights::require_in_box(*s.nu, r.n, "nu");
    }
    return s;
}

Family flavor_of(const Request& r) {
    if (r.flavor == "Y") {
        if (r.n <= 0) throw UsageError("--flavor Y needs -n");
        return Family::Y;
    }
    return Family::y;
}

json int_json(const polyring::Int& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        return static_cast<long long>(c);
    return c.str();
}

json poly_json(const MPoly& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json mono = json::array();
        for (const auto& pw : t.mono.powers())
            mono.push_back({std::string(1, polyring::family_char(pw.family)), pw.index, pw.exp});
        terms.push_back({{"coeff", int_json(t.coeff)}, {"monomial", mono}});
    }
    return terms;
}

json weight_json(const weights::Weight& w) {
    json f = json::array();
    for (const auto& x : w.factors) f.push_back({x.e, x.f});
    return f;
}

json partition_json(const Partition& p) { return p.parts(); }

// Linear forms pair up; other coefficients keep the weight factorization when there is one.
std::string render_coefficient(const MPoly& p, const std::optional<std::vector<weights::Weight>>& ws, Family fam) {
    if (p.is_zero()) return "0";
    std::string pretty = polyring::render_pretty(p);
    if (pretty != p.str() || !ws) return pretty;
    return weights::render_sum(*ws, fam);
}

struct Entry {
    MPoly poly;
    std::optional<std::vector<weights::Weight>> weights;
};
using Table = std::map<Partition, Entry>;

std::vector<Partition> candidate_nus(const Shapes& s, int n) {
    std::vector<Partition> out;
    for (const auto& nu : core::partitions_in_box(s.d, n - s.d))
        if (nu.contains(s.lambda) && nu.contains(s.mu) && nu.size() <= s.lambda.size() + s.mu.size())
            out.push_back(nu);
    return out;
}

Entry tableau_entry(const Shapes& s, const Partition& nu, Family fam, int n, bool positive_only) {
    auto lr = tableaux::enumerate_lr_tableaux(s.lambda, s.mu, s.kappa, nu);
    std::vector<weights::Weight> ws;
    std::vector<MPoly> parts;
    for (const auto& L : lr) {
        if (positive_only && !weights::is_positive(L, weights::Criterion::C1)) continue;
        auto w = fam == Family::Y ? weights::weight_C_L(L, n) : weights::weight_c_L(L);
        parts.push_back(w.poly);
        ws.push_back(std::move(w));
    }
    return {polyring::sum(std::move(parts)), std::move(ws)};
}

Entry puzzle_entry(const Shapes& s, const Partition& nu, Family fam, int n, bool trap) {
    auto ps = trap ? puzzles::enumerate_trapezoid_puzzles(s.lambda, s.mu, nu, n)
                   : puzzles::enumerate_puzzles(s.lambda, s.mu, nu, n);
    std::vector<weights::Weight> ws;
    std::vector<MPoly> parts;
    for (const auto& P : ps) {
        auto w = puzzles::puzzle_weight(P, fam);
        parts.push_back(w.poly);
        ws.push_back(std::move(w));
    }
    return {polyring::sum(std::move(parts)), std::move(ws)};
}

Table compute(const std::string& method, const Shapes& s, Family fam, int n, bool positive_only) {
    bool skew = s.kappa.size() > 0;
    Table t;
    auto keep = [&](const Partition& nu, Entry e) {
        if (!e.poly.is_zero()) t.emplace(nu, std::move(e));
    };
    if (method == "oracle") {
        auto table = schur::expand_product_oracle(s.lambda, s.mu, s.kappa, s.d);
        for (auto& [nu, c] : table) {
            if (s.nu && nu != *s.nu) continue;
            if (fam == Family::Y) {
                if (!nu.in_box(n)) continue;
                keep(nu, {polyring::specialize_y_to_Y(c, n), std::nullopt});
            } else {
                keep(nu, {c, std::nullopt});
            }
        }
        return t;
    }
    if (method == "tableaux") {
        if (skew && fam == Family::Y) throw UsageError("--flavor Y does not support --kappa");
        std::vector<Partition> nus;
        if (s.nu) {
            nus.push_back(*s.nu);
        } else {
            for (const auto& [nu, c] : weights::coefficient_table_by_tableaux(s.lambda, s.mu, s.kappa, positive_only))
                if (fam == Family::y || nu.in_box(n)) nus.push_back(nu);
        }
        auto es = parallel::parallel_map<Entry>(
            nus.size(), [&](std::size_t k) { return tableau_entry(s, nus[k], fam, n, positive_only); });
        for (size_t k = 0; k < nus.size(); ++k) keep(nus[k], std::move(es[k]));
        return t;
    }
    bool trap = method == "trapezoid";
    if (skew) throw UsageError("puzzles do not support --kappa");
    if (n <= 0) throw UsageError("--method " + method + " needs -n");
    std::vector<Partition> nus = s.nu ? std::vector<Partition>{*s.nu} : candidate_nus(s, n);
    auto es = parallel::parallel_map<Entry>(nus.size(),
                                            [&](std::size_t k) { return puzzle_entry(s, nus[k], fam, n, trap); });
    for (size_t k = 0; k < nus.size(); ++k) keep(nus[k], std::move(es[k]));
    return t;
}

bool same(const Table& a, const Table& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [nu, e] : a) {
        auto it = b.find(nu);
        if (it == b.end() || !(it->second.poly == e.poly)) return false;
    }
    return true;
}

int cmd_coeff(const Request& r) {
    Shapes s = parse_shapes(r, false);
    Family fam = flavor_of(r);
    std::vector<std::string> methods;
    if (r.method == "all") {
        methods = {"tableaux", "oracle"};
        if (r.n > 0 && s.kappa.size() == 0) {
            methods.push_back("puzzles");
            methods.push_back("trapezoid");
        }
    } else {
        methods = {r.method};
    }
    if (r.positive_only && r.method != "tableaux") throw UsageError("--positive-only applies to --method tableaux");
    std::vector<Table> tables;
    for (const auto& m : methods) tables.push_back(compute(m, s, fam, r.n, r.positive_only));
    for (size_t k = 1; k < tables.size(); ++k) {
        if (!same(tables[0], tables[k])) {
            std::cerr << "error: methods " << methods[0] << " and " << methods[k] << " disagree\n";
            return invariant;
        }
    }
    const Table& t = tables.front();
    if (r.format == "json") {
        json rows = json::array();
        for (const auto& [nu, e] : t) {
            json poly{{"expanded", poly_json(e.poly)}, {"text", render_coefficient(e.poly, e.weights, fam)}};
            if (e.weights) {
                json f = json::array();
                for (const auto& w : *e.weights)
                    if (!w.poly.is_zero()) f.push_back(weight_json(w));
                poly["factored"] = f;
            }
            rows.push_back({{"nu", partition_json(nu)}, {"poly", poly}});
        }
        json doc{{"d", s.d},
                 {"lambda", partition_json(s.lambda)},
                 {"mu", partition_json(s.mu)},
                 {"kappa", partition_json(s.kappa)},
                 {"flavor", r.flavor},
                 {"methods", methods},
                 {"table", rows}};
        if (r.n > 0) doc["n"] = r.n;
        std::cout << doc.dump() << "\n";
        return ok;
    }
    if (s.nu) {
        auto it = t.find(*s.nu);
        std::cout << (it == t.end() ? "0" : render_coefficient(it->second.poly, it->second.weights, fam)) << "\n";
        return ok;
    }
    if (t.empty()) std::cout << "0\n";
    for (const auto& [nu, e] : t) std::cout << "nu=(" << nu.str() << "): " << render_coefficient(e.poly, e.weights, fam) << "\n";
    return ok;
}

json tableau_json(const tableaux::SkewBarredTableau& L) {
    json cells = json::array();
    const auto& sh = *L.inner.shape;
    for (int k = 0; k < sh.size(); ++k) {
        const auto& c = sh.cell(k);
        cells.push_back({{"r", c.r}, {"c", c.c}, {"value", L.inner[k].value}, {"barred", L.inner[k].barred}});
    }
    return {{"lambda", partition_json(L.lambda)}, {"mu", partition_json(sh.mu())}, {"kappa", partition_json(sh.kappa())},
            {"cells", cells}};
}

json puzzle_json(const puzzles::Puzzle& P) {
    json pieces = json::array();
    for (const auto& pl : P.placements())
        pieces.push_back({{"kind", std::string(1, puzzles::piece_char(pl.kind))},
                          {"anchor", {{"row", P.n() - pl.b}, {"pos", pl.a + 1}, {"orient", pl.up ? "up" : "down"}}}});
    return {{"n", P.n()},
            {"trapezoid", P.trapezoid()},
            {"boundaries", {{"ne", P.ne().str()}, {"nw", P.nw().str()}, {"s", P.s().str()}}},
            {"pieces", pieces}};
}

int cmd_enumerate(const Request& r) {
    bool tab = r.method == "tableaux";
    if (!tab && r.method != "puzzles" && r.method != "trapezoid")
        throw UsageError("enumerate supports --method tableaux, puzzles or trapezoid");
    Shapes s = parse_shapes(r, !tab);
    Family fam = flavor_of(r);
    json items = json::array();
    std::ostringstream out;
    std::size_t count = 0;
    auto emit = [&](json obj, const std::string& picture, const std::string& inline_text, const weights::Weight& w) {
        ++count;
        obj["weight"] = {{"factors", weight_json(w)}, {"text", w.factored()}, {"expanded", poly_json(w.poly)}};
        items.push_back(std::move(obj));
        if (r.format == "ascii")
            out << "#" << count << "  weight " << w.factored() << "\n" << picture << "\n";
        else
            out << "#" << count << "  " << inline_text << "  weight " << w.factored() << "\n";
    };
    if (tab) {
        if (fam == Family::Y && s.kappa.size() > 0) throw UsageError("--flavor Y does not support --kappa");
        auto lr = s.nu ? tableaux::enumerate_lr_tableaux(s.lambda, s.mu, s.kappa, *s.nu)
                       : tableaux::enumerate_lr_tableaux_all(s.lambda, s.mu, s.kappa);
        std::vector<std::pair<core::Composition, tableaux::SkewBarredTableau>> keyed;
        for (auto& L : lr) {
            if (r.positive_only && !weights::is_positive(L, weights::Criterion::C1)) continue;
            keyed.push_back({tableaux::unbarred_content(L), std::move(L)});
        }
        std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return tableaux::canonical_less(a.second.inner, b.second.inner);
        });
        for (const auto& [c, L] : keyed) {
            auto w = fam == Family::Y ? weights::weight_C_L(L, r.n) : weights::weight_c_L(L);
            emit(tableau_json(L), tableaux::render(L), tableaux::render_inline(L.inner), w);
        }
    } else {
        if (s.kappa.size() > 0) throw UsageError("puzzles do not support --kappa");
        if (r.n <= 0) throw UsageError("--method " + r.method + " needs -n");
        auto ps = r.method == "trapezoid" ? puzzles::enumerate_trapezoid_puzzles(s.lambda, s.mu, *s.nu, r.n)
                                          : puzzles::enumerate_puzzles(s.lambda, s.mu, *s.nu, r.n);
        for (const auto& P : ps) {
            auto L = puzzles::phi(P);
            emit(puzzle_json(P), P.render(), "phi: " + tableaux::render_inline(L.inner), puzzles::puzzle_weight(P, fam));
        }
    }
    if (r.format == "json") {
        std::cout << json{{"count", count}, {"items", items}}.dump() << "\n";
    } else {
        std::cout << out.str() << "count: " << count << "\n";
    }
    return ok;
}

int cmd_verify(const Request& r, bool d_given) {
    std::vector<std::string> names;
    if (r.suite == "all") {
        names = verify::suite_names();
    } else {
        const auto& all = verify::suite_names();
        if (std::find(all.begin(), all.end(), r.suite) == all.end()) throw UsageError("unknown suite '" + r.suite + "'");
        names = {r.suite};
    }
    json suites = json::array();
    bool any_fail = false, any_invariant = false;
    for (const auto& name : names) {
        verify::Options opt;
        opt.d = d_given ? r.d : (name == "bijection" ? 2 : 3);
        opt.n = r.n;
        opt.seed = r.seed;
        if (!r.max_shape.empty()) opt.max_shape = core::parse_int_list(r.max_shape);
        auto rep = verify::run_suite(name, opt);
        json cases = json::array();
        for (const auto& c : rep.cases) {
            cases.push_back({{"id", c.id}, {"ok", c.ok}, {"detail", c.detail}});
            if (!c.ok && c.detail.rfind("invariant:", 0) == 0) any_invariant = true;
        }
        any_fail = any_fail || !rep.ok();
        suites.push_back({{"suite", name}, {"ok", rep.ok()}, {"cases", cases}, {"failures", rep.failures()}});
        if (r.format != "json") {
            std::cout << name << ": " << (rep.ok() ? "pass" : "FAIL") << " (" << rep.cases.size() << " cases";
            if (!rep.ok()) std::cout << ", " << rep.failures() << " failed";
            std::cout << ")\n";
            for (const auto& c : rep.cases)
                if (!c.ok) std::cout << "  FAIL " << c.id << ": " << c.detail << "\n";
        }
    }
    if (r.format == "json") std::cout << json{{"ok", !any_fail}, {"suites", suites}}.dump() << "\n";
    if (any_invariant) return invariant;
    return any_fail ? failed : ok;
}

void add_shape_options(CLI::App* cmd, Request& r) {
    cmd->add_option("-d", r.d, "Number of parts (defaults to the longest list)")->check(CLI::PositiveNumber);
    cmd->add_option("-n", r.n, "Side length; shapes must lie in P_{d,n}")->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", r.lambda, "Comma-separated parts, e.g. 2,1");
    cmd->add_option("--mu", r.mu, "Comma-separated parts");
    cmd->add_option("--nu", r.nu, "Comma-separated parts");
    cmd->add_option("--kappa", r.kappa, "Inner shape of a skew mu/kappa");
    cmd->add_option("--flavor", r.flavor, "y (factorial Schur) or Y (equivariant Schubert)")
        ->check(CLI::IsMember({"y", "Y"}));
    cmd->add_flag("--positive-only", r.positive_only, "Only tableaux whose weight factors all have e > f");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Littlewood-Richardson coefficients by barred tableaux, puzzles and factorial Schur expansion"};
    app.require_subcommand(1);
    Request r;
    app.add_option("--threads", r.threads, "Worker threads (default: EQLR_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);

    auto* coeff = app.add_subcommand("coeff", "Compute c_{lambda,mu}^nu (or the full table when --nu is omitted)");
    add_shape_options(coeff, r);
    coeff->add_option("--method", r.method, "tableaux, puzzles, trapezoid, oracle, or all to cross-check")
        ->check(CLI::IsMember({"tableaux", "puzzles", "trapezoid", "oracle", "all"}));
    coeff->add_option("--format", r.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* enumerate = app.add_subcommand("enumerate", "List tableaux or puzzles with their weights");
    add_shape_options(enumerate, r);
    enumerate->add_option("--method", r.method, "tableaux, puzzles or trapezoid")
        ->check(CLI::IsMember({"tableaux", "puzzles", "trapezoid"}));
    enumerate->add_option("--format", r.format, "text, ascii or json")->check(CLI::IsMember({"text", "ascii", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    std::vector<std::string> suites = verify::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", r.suite, "Suite name")->required();
    verify_cmd->add_option("-d", r.d, "Number of parts")->check(CLI::PositiveNumber);
    verify_cmd->add_option("-n", r.n, "Largest side length (bijection) or n for Y checks")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-shape", r.max_shape, "Box bounding the swept shapes, e.g. 3,3,3");
    verify_cmd->add_option("--seed", r.seed, "Seed for randomized cases");
    verify_cmd->add_option("--format", r.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    if (r.threads > 0) parallel::set_threads(r.threads);
    try {
        if (coeff->parsed()) return cmd_coeff(r);
        if (enumerate->parsed()) return cmd_enumerate(r);
        return cmd_verify(r, verify_cmd->count("-d") > 0);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return invariant;
    }
}
