#include "property_suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "eideal/betti.hpp"
#include "eideal/canonical.hpp"
#include "eideal/enumerate.hpp"
#include "eideal/graph_io.hpp"
#include "eideal/harness.hpp"
#include "eideal/linalg.hpp"
#include "eideal/symbolic.hpp"

namespace props {

using namespace eideal;
using Rng = std::mt19937_64;
using Exps = std::vector<Monomial::Exponent>;

namespace {

int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Monomial random_monomial(Rng& rng, int vars, int max_exp, bool allow_unit = false) {
    for (;;) {
        Exps e(vars);
        for (auto& x : e) x = static_cast<Monomial::Exponent>(pick(rng, 0, max_exp));
        const Monomial m{e};
        if (allow_unit || !m.is_unit()) return m;
    }
}

MonomialIdeal random_ideal(Rng& rng, int vars, int max_gens, int max_exp) {
    std::vector<Monomial> gens;
    const int count = pick(rng, 1, max_gens);
    for (int i = 0; i < count; ++i) gens.push_back(random_monomial(rng, vars, max_exp));
    return MonomialIdeal::make(vars, std::move(gens));
}

// All monomials in `vars` variables of total degree at most `bound`.
void monomials_up_to(int vars, int bound, Exps& cur, int at, std::vector<Monomial>& out) {
    if (at == vars) {
        out.push_back(Monomial(cur));
        return;
    }
    int used = 0;
    for (int i = 0; i < at; ++i) used += static_cast<int>(cur[i]);
    for (int e = 0; e + used <= bound; ++e) {
        cur[at] = static_cast<Monomial::Exponent>(e);
        monomials_up_to(vars, bound, cur, at + 1, out);
    }
    cur[at] = 0;
}

std::vector<Monomial> monomials_up_to(int vars, int bound) {
    std::vector<Monomial> out;
    Exps cur(vars, 0);
    monomials_up_to(vars, bound, cur, 0, out);
    return out;
}

struct Suite {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

std::string show(const MonomialIdeal& I) { return "(" + I.str() + ")"; }

std::vector<SimpleGraph> nonempty_graphs_up_to(int max_n) {
    std::vector<SimpleGraph> out;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& g : enumerate_all_graphs(n)) {
            if (g.edge_count() > 0) out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> monomial_properties(const Options& opt) {
    Rng rng(opt.seed ^ 0x6d6f6e6f);
    Suite s;
    const int rounds = opt.full ? 300 : 80;

    for (int r = 0; r < rounds; ++r) {
        const int vars = pick(rng, 2, 4);
        const MonomialIdeal I = random_ideal(rng, vars, 5, 3);

        // minimalize is idempotent (make() minimalizes, so a fixed point).
        std::vector<Monomial> gens = I.generators();
        s.expect(minimalize(minimalize(gens)) == minimalize(gens),
                 "minimalize not idempotent on " + show(I));

        // Powers multiply.
        const int a = pick(rng, 0, 2);
        const int t = pick(rng, 0, 4 - a);
        s.expect(product(power(I, a), power(I, t)) == power(I, a + t),
                 "power additivity fails for " + show(I) + " at " + std::to_string(a) +
                     "+" + std::to_string(t));

        // Colon contains the ideal and is monotone under divisibility.
        const Monomial m = random_monomial(rng, vars, 2);
        const MonomialIdeal cm = colon(I, m);
        s.expect(cm.contains_ideal(I), "colon(I,m) does not contain I for " + show(I) +
                                           " m=" + m.str());
        const Monomial mp = m.times(random_monomial(rng, vars, 1, true));
        s.expect(colon(I, mp).contains_ideal(cm),
                 "colon not monotone: " + show(I) + " m=" + m.str() + " m'=" + mp.str());
    }

    for (int r = 0; r < (opt.full ? 60 : 20); ++r) {
        const int vars = pick(rng, 2, 3);
        const MonomialIdeal I = random_ideal(rng, vars, 4, 2);
        const MonomialIdeal J = random_ideal(rng, vars, 4, 2);
        const MonomialIdeal K = random_ideal(rng, vars, 4, 2);

        s.expect(intersect(I, J) == intersect(J, I),
                 "intersect not commutative: " + show(I) + " " + show(J));
        s.expect(intersect(intersect(I, J), K) == intersect(I, intersect(J, K)),
                 "intersect not associative: " + show(I) + " " + show(J) + " " + show(K));

        const MonomialIdeal meet = intersect(I, J);
        for (const Monomial& m : monomials_up_to(vars, 5)) {
            s.expect(meet.contains(m) == (I.contains(m) && J.contains(m)),
                     "intersect membership differs at " + m.str() + " for " + show(I) +
                         " " + show(J));
        }

        const int d = pick(rng, 1, 4);
        const MonomialIdeal cut = intersect_max_power(I, d);
        for (const Monomial& m : monomials_up_to(vars, d + 2)) {
            const bool want = I.contains(m) && m.degree() >= static_cast<std::uint64_t>(d);
            s.expect(cut.contains(m) == want,
                     "max-power intersection differs at " + m.str() + " for " + show(I) +
                         " d=" + std::to_string(d));
        }
    }
    return s.failures;
}

namespace {

IntMatrix random_matrix(Rng& rng, int rows, int cols, int span) {
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.at(i, j) = pick(rng, -span, span);
    }
    return m;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    }
    return t;
}

IntMatrix permuted(Rng& rng, const IntMatrix& m) {
    std::vector<std::size_t> rp(m.rows()), cp(m.cols());
    for (std::size_t i = 0; i < rp.size(); ++i) rp[i] = i;
    for (std::size_t j = 0; j < cp.size(); ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(rp[i], cp[j]);
    }
    return out;
}

// Signed boundary matrix between consecutive face groups, rebuilt here
// independently of the library's internal one.
IntMatrix boundary_of(const std::vector<std::vector<int>>& rows,
                      const std::vector<std::vector<int>>& cols) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        int sign = 1;
        for (std::size_t k = 0; k < cols[c].size(); ++k) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < cols[c].size(); ++i) {
                if (i != k) sub.push_back(cols[c][i]);
            }
            m.at(index.at(sub), c) = sign;
            sign = -sign;
        }
    }
    return m;
}

bool product_is_zero(const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            long long acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::string> linalg_properties(const Options& opt) {
    Rng rng(opt.seed ^ 0x72616e6b);
    Suite s;
    const std::vector<std::uint64_t> primes{2, 3, 5, 32003};

    for (int r = 0; r < (opt.full ? 400 : 120); ++r) {
        const IntMatrix m = random_matrix(rng, pick(rng, 1, 6), pick(rng, 1, 6), 4);
        const std::size_t rq = rank_rational(m);

        for (const auto p : primes) {
            s.expect(rq >= rank_mod_p(m, p),
                     "specialization raised rank mod " + std::to_string(p));
        }
        s.expect(rank_rational(permuted(rng, m)) == rq, "rank changed under permutation");
        s.expect(rank_rational(transpose(m)) == rq, "rank changed under transposition");
        const auto p = primes[pick(rng, 0, 3)];
        s.expect(rank_mod_p(transpose(m), p) == rank_mod_p(m, p),
                 "mod-p rank changed under transposition");
    }

    // Composable boundary maps square to zero and their ranks cannot exceed
    // the chain groups they act on.
    for (int n = 3; n <= (opt.full ? 6 : 5); ++n) {
        for (const auto& g : enumerate_connected(n)) {
            if (g.edge_count() == 0) continue;
            const MonomialIdeal I = edge_ideal(g);
            for (const auto& alpha : lcm_lattice(I).elements) {
                const auto K = upper_koszul(I, Monomial(alpha));
                if (K.is_void()) continue;
                const auto groups = K.faces_by_dim();
                for (std::size_t k = 1; k + 1 < groups.size(); ++k) {
                    const IntMatrix dk = boundary_of(groups[k - 1], groups[k]);
                    const IntMatrix dk1 = boundary_of(groups[k], groups[k + 1]);
                    s.expect(product_is_zero(dk, dk1), "boundary squared nonzero");
                    s.expect(rank_rational(dk) + rank_rational(dk1) <= groups[k].size(),
                             "boundary ranks exceed chain dimension");
                }
            }
        }
    }
    return s.failures;
}

std::vector<std::string> betti_properties(const Options& opt) {
    Suite s;
    const Field q = Field::rationals();
    const auto graphs = nonempty_graphs_up_to(opt.full ? 6 : 5);

    for (const auto& g : graphs) {
        const MonomialIdeal I = edge_ideal(g);
        std::vector<MonomialIdeal> pool{I};
        const MonomialIdeal sq = power(I, 2);
        if (sq.generator_count() <= 12) pool.push_back(sq);

        for (const auto& J : pool) {
            const BettiTable table = betti_table(J, q);

            const auto oracle = taylor_strand_betti(J, q);
            if (oracle) {
                s.expect(*oracle == table,
                         "Taylor strand oracle disagrees for " + show(J));
            }

            // β_0 rows are exactly the minimal generators, rank 1 each.
            std::map<Exps, std::size_t> b0;
            for (const auto& [key, rank] : table.entries()) {
                if (key.i == 0) b0[key.alpha] = rank;
            }
            std::map<Exps, std::size_t> want;
            for (const auto& m : J.generators()) want[m.exponents()] = 1;
            s.expect(b0 == want, "beta_0 is not the generator multiset for " + show(J));

            // A generator of least degree contributes |α| − 0 to the max.
            std::uint64_t mindeg = ~std::uint64_t(0);
            for (const auto& m : J.generators()) mindeg = std::min(mindeg, m.degree());
            s.expect(table.regularity() >= static_cast<int>(mindeg),
                     "regularity below least generator degree for " + show(J));
        }

        // Euler characteristic consistency on every Koszul complex of I.
        for (const auto& alpha : lcm_lattice(I).elements) {
            const auto K = upper_koszul(I, Monomial(alpha));
            if (K.is_void()) continue;
            const auto groups = K.faces_by_dim();
            const auto ranks = reduced_homology_ranks(K, q);
            long long chi_faces = 0, chi_hom = 0;
            for (std::size_t k = 0; k < groups.size(); ++k) {
                const long long sign = k % 2 == 0 ? 1 : -1;
                chi_faces += sign * static_cast<long long>(groups[k].size());
                chi_hom += sign * static_cast<long long>(ranks[k]);
            }
            s.expect(chi_faces == chi_hom, "Euler characteristic mismatch for " + show(I));
        }

        // Induced-matching lower bound for the regularity.
        if (g.is_connected()) {
            s.expect(regularity(I, q) >= g.induced_matching_number() + 1,
                     "regularity below nu+1 for " + encode_graph6(g));
        }
    }
    return s.failures;
}

std::vector<std::string> graph_properties(const Options& opt) {
    Rng rng(opt.seed ^ 0x67726170);
    Suite s;

    // Unicyclic stream: connectivity, |E| = |V|, canonical order, and an
    // independent labeled-enumeration oracle for the isomorphism counts.
    for (int n = 3; n <= (opt.full ? 7 : 5); ++n) {
        const auto batch = enumerate_unicyclic(n);
        std::set<std::string> codes;
        for (const auto& g : batch) {
            s.expect(g.is_connected(), "unicyclic graph not connected");
            s.expect(g.edge_count() == static_cast<std::size_t>(g.vertex_count()),
                     "unicyclic graph without |E| = |V|");
            codes.insert(encode_graph6(g));
        }
        s.expect(codes.size() == batch.size(), "duplicate canonical codes in stream");

        if (n <= 6) {
            // Brute force over labeled graphs: all n-edge subsets of the
            // complete graph, filtered, deduplicated by permutation orbit.
            std::vector<std::pair<int, int>> all;
            for (int u = 1; u <= n; ++u) {
                for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
            }
            std::set<std::string> orbit_reps;
            std::vector<int> perm(n);
            std::vector<bool> take(all.size(), false);
            std::fill(take.end() - n, take.end(), true);
            std::vector<std::pair<int, int>> edges;
            do {
                edges.clear();
                for (std::size_t i = 0; i < all.size(); ++i) {
                    if (take[i]) edges.push_back(all[i]);
                }
                const SimpleGraph g = SimpleGraph::from_edges(n, edges);
                if (!g.is_connected()) continue;
                // Minimal labeled encoding over all permutations.
                for (int i = 0; i < n; ++i) perm[i] = i + 1;
                std::string best;
                do {
                    std::vector<std::pair<int, int>> relabeled;
                    for (const auto& [u, v] : edges) {
                        relabeled.emplace_back(perm[u - 1], perm[v - 1]);
                    }
                    const std::string code =
                        encode_graph6(SimpleGraph::from_edges(n, relabeled));
                    if (best.empty() || code < best) best = code;
                } while (std::next_permutation(perm.begin(), perm.end()));
                orbit_reps.insert(best);
            } while (std::next_permutation(take.begin(), take.end()));
            s.expect(orbit_reps.size() == batch.size(),
                     "unicyclic count differs from labeled oracle at n=" +
                         std::to_string(n));
        }
    }

    // Cover structure on every connected graph at small order.
    for (int n = 2; n <= (opt.full ? 7 : 5); ++n) {
        for (const auto& g : enumerate_connected(n)) {
            for (const auto& cover : g.minimal_vertex_covers()) {
                for (const auto& [u, v] : g.edges()) {
                    s.expect(std::binary_search(cover.begin(), cover.end(), u) ||
                                 std::binary_search(cover.begin(), cover.end(), v),
                             "edge not covered");
                }
                // Complement is independent and maximal: every cover vertex
                // has a neighbor outside the cover.
                std::set<int> in(cover.begin(), cover.end());
                for (int u : g.vertices()) {
                    if (in.count(u)) continue;
                    for (int v : g.neighbors(u)) {
                        s.expect(in.count(v) > 0, "cover complement not independent");
                    }
                }
                for (int u : cover) {
                    bool needed = false;
                    for (int v : g.neighbors(u)) {
                        if (!in.count(v)) needed = true;
                    }
                    s.expect(needed || g.degree(u) == 0, "cover not minimal");
                }
            }
        }
    }

    // Canonical codes are isomorphism invariants; graph6 round trips.
    for (int n = 3; n <= (opt.full ? 7 : 6); ++n) {
        const auto batch = n <= 6 ? enumerate_connected(n) : enumerate_unicyclic(n);
        for (const auto& g : batch) {
            s.expect(parse_graph6(encode_graph6(g)) == g, "graph6 round trip failed");
            const std::string code = canonical_code(g);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i + 1;
            for (int shot = 0; shot < 3; ++shot) {
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<std::pair<int, int>> relabeled;
                for (const auto& [u, v] : g.edges()) {
                    relabeled.emplace_back(perm[u - 1], perm[v - 1]);
                }
                s.expect(canonical_code(SimpleGraph::from_edges(n, relabeled)) == code,
                         "canonical code not invariant under relabeling");
            }
        }
    }

    // Triangle inequality for distance_to_set via pairwise distances.
    for (int r = 0; r < (opt.full ? 40 : 15); ++r) {
        const int n = pick(rng, 3, 7);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                if (pick(rng, 0, 2) == 0) edges.emplace_back(u, v);
            }
        }
        const SimpleGraph g = SimpleGraph::from_edges(n, edges);
        for (int x = 1; x <= n; ++x) {
            for (int y = 1; y <= n; ++y) {
                const auto dxy = g.distance_to_set(x, {y});
                for (int z = 1; z <= n; ++z) {
                    const auto dxz = g.distance_to_set(x, {z});
                    const auto dzy = g.distance_to_set(z, {y});
                    if (dxz && dzy) {
                        s.expect(dxy.has_value() && *dxy <= *dxz + *dzy,
                                 "distance triangle inequality violated");
                    }
                }
                // Set distance is the pointwise minimum.
                std::vector<int> W;
                for (int w = 1; w <= n; ++w) {
                    if (pick(rng, 0, 1)) W.push_back(w);
                }
                if (W.empty()) continue;
                std::optional<int> best;
                for (int w : W) {
                    const auto d = g.distance_to_set(x, {w});
                    if (d && (!best || *d < *best)) best = d;
                }
                s.expect(g.distance_to_set(x, W) == best, "set distance is not the min");
            }
        }
    }
    return s.failures;
}

std::vector<std::string> symbolic_properties(const Options& opt) {
    Rng rng(opt.seed ^ 0x73796d62);
    Suite s;
    const int max_n = opt.full ? 6 : 5;

    std::vector<SimpleGraph> corpus;
    for (int n = 3; n <= max_n; ++n) {
        for (auto& g : enumerate_unicyclic(n)) corpus.push_back(std::move(g));
    }
    for (int n = 2; n <= max_n; ++n) {
        for (auto& g : enumerate_forests(n)) corpus.push_back(std::move(g));
    }

    for (const auto& g : corpus) {
        const MonomialIdeal I = edge_ideal(g);
        const std::string code = encode_graph6(g);
        for (int t = 1; t <= 3; ++t) {
            const MonomialIdeal sym = symbolic_power(g, t);

            // Sandwich: I^t ⊆ I^(t) ⊆ I.
            s.expect(sym.contains_ideal(power(I, t)),
                     "ordinary power not inside symbolic for " + code);
            s.expect(I.contains_ideal(sym), "symbolic power not inside ideal for " + code);

            // Membership test agrees with the constructed ideal.
            const int vars = static_cast<int>(I.vars());
            if (vars <= 6) {
                for (const auto& m : monomials_up_to(vars, 2 * t + 2)) {
                    s.expect(symbolic_member(g, m, t) == sym.contains(m),
                             "symbolic membership differs at " + m.str() + " for " + code);
                }
            }

            // Adding an edge makes symbolic powers blind to its deletion.
            const auto edges = g.edges();
            const auto& e = edges[pick(rng, 0, static_cast<int>(edges.size()) - 1)];
            Exps xy(I.vars(), 0);
            xy[e.first - 1] = 1;
            xy[e.second - 1] = 1;
            const MonomialIdeal exy = MonomialIdeal::make(I.vars(), {Monomial(xy)});
            const SimpleGraph del = g.delete_edge(e.first, e.second);
            const MonomialIdeal rhs =
                del.edge_count() == 0 ? exy : sum(symbolic_power(del, t), exy);
            s.expect(sum(sym, exy) == rhs, "edge deletion identity fails for " + code);

            // Pendant colon peels a power.
            const auto leaves = g.leaves();
            if (!leaves.empty()) {
                const int x = leaves[pick(rng, 0, static_cast<int>(leaves.size()) - 1)];
                const int y = g.neighbors(x)[0];
                Exps pe(I.vars(), 0);
                pe[x - 1] = 1;
                pe[y - 1] = 1;
                const MonomialIdeal got = colon(sym, Monomial(pe));
                if (t == 1) {
                    s.expect(got.is_whole_ring(), "pendant colon at s=1 not the whole ring");
                } else {
                    s.expect(got == symbolic_power(g, t - 1),
                             "pendant colon did not peel one power for " + code);
                }
            }
        }

        // Truncation at degree 2s recovers the ordinary power when all
        // leaves hang on the cycle.
        const auto cyc = g.unique_cycle();
        if (cyc) {
            bool on_cycle = true;
            for (int x : g.leaves()) {
                const auto d = g.distance_to_set(x, cyc->vertices);
                if (!d || *d != 1) on_cycle = false;
            }
            if (on_cycle) {
                for (int t = 1; t <= 3; ++t) {
                    s.expect(intersect_max_power(symbolic_power(g, t), 2 * t) ==
                                 power(I, t),
                             "degree-2s truncation differs for " + code);
                }
            }
        }
    }

    // Odd cycles have the closed-form symbolic decomposition.
    for (int n : {3, 5, 7}) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
        const SimpleGraph c = SimpleGraph::from_edges(n, edges);
        for (int t = 1; t <= 4; ++t) {
            s.expect(odd_cycle_symbolic_sum(c, t) == symbolic_power(c, t),
                     "odd cycle decomposition fails at n=" + std::to_string(n));
        }
    }

    // Bipartite collapse.
    for (int n = 2; n <= max_n; ++n) {
        for (const auto& g : enumerate_connected(n)) {
            if (!g.is_bipartite() || g.edge_count() == 0) continue;
            for (int t = 1; t <= 3; ++t) {
                s.expect(symbolic_power(g, t) == power(edge_ideal(g), t),
                         "bipartite symbolic power differs at " + encode_graph6(g));
            }
        }
    }
    return s.failures;
}

std::vector<std::string> harness_properties(const Options& opt) {
    Suite s;
    Config c;
    c.max_n = 4;
    c.max_s = 2;
    c.forest_max_n = 4;
    c.seed = opt.seed;

    // The config echo is stripped along with the volatile header fields so
    // runs that differ only in scheduling knobs stay comparable.
    auto stable = [](const Report& r) {
        std::ostringstream os;
        write_json(r, os);
        std::string text = os.str();
        for (const char* key : {"\"timestamp\"", "\"total_elapsed_s\"", "\"config\""}) {
            const auto p = text.find(key);
            if (p == std::string::npos) return std::string("missing header field");
            text.erase(p, text.find('\n', p) - p);
        }
        return text;
    };

    const Report base = check_main(c);
    s.expect(report_exit_code(base) == 0, "clean run exits nonzero");
    s.expect(stable(base) == stable(check_main(c)), "reports differ between runs");
    Config par = c;
    par.jobs = 3;
    s.expect(stable(base) == stable(check_main(par)), "reports depend on the job count");

    Config bad = c;
    bad.inject_failure = true;
    s.expect(report_exit_code(check_main(bad)) == 1, "injected failure kept exit code 0");

    for (const Report& r : {base, check_lemmas(c), check_prop_sum(c), check_bounds(c),
                            check_case2_monotonicity(c)}) {
        std::set<std::pair<std::string, std::string>> keys;
        bool unique = true;
        for (const auto& res : r.results) {
            unique = keys.emplace(res.check_id, res.instance).second && unique;
        }
        s.expect(unique, "duplicate (check, instance) pair in report");
    }
    return s.failures;
}

std::vector<std::string> all_properties(const Options& opt) {
    std::vector<std::string> all;
    for (auto* fn : {monomial_properties, linalg_properties, betti_properties,
                     graph_properties, symbolic_properties, harness_properties}) {
        auto part = fn(opt);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace props
