#include "eideal/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "eideal/canonical.hpp"
#include "eideal/enumerate.hpp"
#include "eideal/graph_io.hpp"
#include "eideal/parallel.hpp"
#include "eideal/symbolic.hpp"
#include "eideal/version.hpp"

namespace eideal {

void Config::validate() const {
    if (max_n < 3) throw ArgumentError("--max-n must be at least 3");
    if (max_s < 1) throw ArgumentError("--max-s must be at least 1");
    if (jobs < 1) throw ArgumentError("--jobs must be at least 1");
    if (fields.empty()) throw ArgumentError("at least one --field is required");
    if (corpus != "unicyclic" && corpus != "bipartite" && corpus != "all-small") {
        throw ArgumentError("--corpus must be unicyclic, bipartite or all-small");
    }
    if (format != "json" && format != "csv") {
        throw ArgumentError("--format must be json or csv");
    }
    if (partition_cap < 1) throw ArgumentError("partition cap must be at least 1");
    if (forest_max_n < 2) throw ArgumentError("forest corpus bound must be at least 2");
}

std::size_t Report::count(const std::string& status) const {
    std::size_t total = 0;
    for (const auto& r : results) {
        if (r.status == status) ++total;
    }
    return total;
}

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string config_echo(const Config& c) {
    std::ostringstream os;
    os << "max_n=" << c.max_n << " max_s=" << c.max_s << " fields=";
    for (std::size_t i = 0; i < c.fields.size(); ++i) {
        if (i) os << ",";
        os << c.fields[i].str();
    }
    os << " lattice_cap=" << c.lattice_cap << " jobs=" << c.jobs << " corpus=" << c.corpus
       << " partition_cap=" << c.partition_cap << " forest_max_n=" << c.forest_max_n
       << " seed=" << c.seed;
    return os.str();
}

std::string gens_brief(const MonomialIdeal& I) {
    std::ostringstream os;
    os << "[" << I.str() << "]";
    return os.str();
}

// Regularity results are shared across checks and between the symbolic and
// ordinary sides; key on the rendered ideal, which is canonical.
class RegCache {
  public:
    int get(const MonomialIdeal& I, const Field& field, std::size_t lattice_cap) {
        const std::string key = field.str() + "|" + I.str();
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(key);
            if (it != map_.end()) return it->second;
        }
        const int r = regularity(I, field, 1, lattice_cap);
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, r);
        return r;
    }

  private:
    std::mutex mu_;
    std::unordered_map<std::string, int> map_;
};

using Task = std::function<std::vector<CheckResult>()>;

Report run_tasks(const Config& config, std::vector<Task> tasks) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::vector<CheckResult>> buckets(tasks.size());
    parallel_for(tasks.size(), config.jobs, [&](std::size_t i) { buckets[i] = tasks[i](); });
    Report report;
    report.tool = "eideal";
    report.version = EIDEAL_VERSION;
    report.config = config_echo(config);
    report.timestamp = utc_timestamp();
    for (auto& bucket : buckets) {
        for (auto& r : bucket) report.results.push_back(std::move(r));
    }
    std::sort(report.results.begin(), report.results.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  if (a.check_id != b.check_id) return a.check_id < b.check_id;
                  return a.instance < b.instance;
              });
    report.total_elapsed = seconds_since(start);
    return report;
}

// Wraps a task body: failures from resource caps become skips, anything else
// unexpected becomes a fail carrying the message.
std::vector<CheckResult> guarded(const std::string& check_id, const std::string& instance,
                                 const std::function<std::vector<CheckResult>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckResult> out;
    try {
        out = body();
    } catch (const ResourceError& e) {
        out = {{check_id, instance, "skip", std::string("resource: ") + e.what(), 0.0}};
    } catch (const std::exception& e) {
        out = {{check_id, instance, "fail", std::string("error: ") + e.what(), 0.0}};
    }
    const double elapsed = seconds_since(start);
    if (!out.empty()) {
        for (auto& r : out) {
            if (r.elapsed == 0.0) r.elapsed = elapsed / out.size();
        }
    }
    return out;
}

std::vector<SimpleGraph> corpus_graphs(const Config& config) {
    std::vector<SimpleGraph> graphs;
    auto keep = [&](std::vector<SimpleGraph> batch) {
        for (auto& g : batch) {
            if (g.edge_count() > 0) graphs.push_back(std::move(g));
        }
    };
    if (config.corpus == "unicyclic") {
        for (int n = 3; n <= config.max_n; ++n) keep(enumerate_unicyclic(n));
    } else if (config.corpus == "bipartite") {
        for (int n = 2; n <= config.max_n; ++n) {
            std::vector<SimpleGraph> batch;
            for (auto& g : enumerate_connected(n)) {
                if (g.is_bipartite()) batch.push_back(std::move(g));
            }
            keep(std::move(batch));
        }
    } else {
        for (int n = 2; n <= config.max_n; ++n) keep(enumerate_all_graphs(n));
    }
    return graphs;
}

std::vector<SimpleGraph> forest_corpus(int max_n) {
    std::vector<SimpleGraph> graphs;
    for (int n = 2; n <= max_n; ++n) {
        for (auto& g : enumerate_forests(n)) graphs.push_back(std::move(g));
    }
    return graphs;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

Report check_main(const Config& config) {
    config.validate();
    auto cache = std::make_shared<RegCache>();
    const auto graphs = corpus_graphs(config);
    std::vector<Task> tasks;
    bool first = true;
    for (const auto& g : graphs) {
        const std::string code = encode_graph6(g);
        for (int s = 1; s <= config.max_s; ++s) {
            const bool corrupt = config.inject_failure && first;
            first = false;
            tasks.push_back([&config, cache, g, code, s, corrupt]() {
                const std::string base = "g6=" + code + ";n=" +
                                         std::to_string(g.vertex_count()) + ";s=" +
                                         std::to_string(s);
                return guarded("main.symbolic-vs-ordinary", base + ";field=*", [&]() {
                    const MonomialIdeal sym = symbolic_power(g, s);
                    const MonomialIdeal ord = power(edge_ideal(g), s);
                    std::vector<CheckResult> out;
                    for (const auto& field : config.fields) {
                        int r_sym = cache->get(sym, field, config.lattice_cap);
                        const int r_ord = cache->get(ord, field, config.lattice_cap);
                        if (corrupt) r_sym += 1;
                        const bool ok = r_sym == r_ord;
                        std::string observed =
                            "sym=" + std::to_string(r_sym) + ";ord=" + std::to_string(r_ord);
                        if (!ok) {
                            observed += ";sym_gens=" + gens_brief(sym) +
                                        ";ord_gens=" + gens_brief(ord);
                        }
                        out.push_back({"main.symbolic-vs-ordinary",
                                       base + ";field=" + field.str(), pass_fail(ok),
                                       observed, 0.0});
                    }
                    return out;
                });
            });
        }
    }
    Report report = run_tasks(config, std::move(tasks));
    return report;
}

Report check_lemmas(const Config& config) {
    config.validate();
    auto cache = std::make_shared<RegCache>();
    const auto graphs = corpus_graphs(config);
    std::vector<Task> tasks;
    for (const auto& g : graphs) {
        const std::string code = encode_graph6(g);

        // Deleting the closed neighborhood of a leaf's support vertex drops
        // the regularity of every power by at least one.
        std::set<int> support_vertices;
        for (int x : g.leaves()) support_vertices.insert(g.neighbors(x)[0]);
        for (int y : support_vertices) {
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, cache, g, code, y, s]() {
                    const std::string inst = "g6=" + code + ";y=" + std::to_string(y) +
                                             ";s=" + std::to_string(s);
                    return guarded("lemmas.neighborhood-deletion", inst + ";field=*", [&]() {
                        const SimpleGraph h = g.delete_vertices(g.closed_neighbors(y));
                        std::vector<CheckResult> out;
                        if (h.edge_count() == 0) {
                            out.push_back({"lemmas.neighborhood-deletion",
                                           inst + ";field=*", "pass",
                                           "deleted graph has no edges; bound is vacuous",
                                           0.0});
                            return out;
                        }
                        const MonomialIdeal lhs = power(edge_ideal(h), s);
                        const MonomialIdeal rhs = power(edge_ideal(g), s);
                        for (const auto& field : config.fields) {
                            const int rl = cache->get(lhs, field, config.lattice_cap);
                            const int rr = cache->get(rhs, field, config.lattice_cap);
                            const bool ok = rl <= rr - 1;
                            std::string observed = "deleted=" + std::to_string(rl) +
                                                   ";full=" + std::to_string(rr);
                            if (!ok) {
                                observed += ";deleted_gens=" + gens_brief(lhs) +
                                            ";full_gens=" + gens_brief(rhs);
                            }
                            out.push_back({"lemmas.neighborhood-deletion",
                                           inst + ";field=" + field.str(), pass_fail(ok),
                                           observed, 0.0});
                        }
                        return out;
                    });
                });
            }
        }

        // Adding an edge's monomial makes the symbolic powers of G and of
        // G-minus-that-edge agree.
        for (const auto& e : g.edges()) {
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, g, code, e, s]() {
                    const std::string inst = "g6=" + code + ";edge=" +
                                             std::to_string(e.first) + "-" +
                                             std::to_string(e.second) + ";s=" +
                                             std::to_string(s);
                    return guarded("lemmas.edge-deletion", inst, [&]() {
                        std::vector<Monomial::Exponent> xy(g.ambient(), 0);
                        xy[e.first - 1] = 1;
                        xy[e.second - 1] = 1;
                        const MonomialIdeal exy =
                            MonomialIdeal::make(g.ambient(), {Monomial(xy)});
                        const SimpleGraph gp = g.delete_edge(e.first, e.second);
                        const MonomialIdeal lhs = sum(symbolic_power(g, s), exy);
                        const MonomialIdeal rhs =
                            sum(gp.edge_count() == 0 ? MonomialIdeal::zero(g.ambient())
                                                     : symbolic_power(gp, s),
                                exy);
                        const bool ok = lhs == rhs;
                        std::string observed = "lhs_gens=" + std::to_string(lhs.generator_count()) +
                                               ";rhs_gens=" + std::to_string(rhs.generator_count());
                        if (!ok) {
                            observed += ";lhs=" + gens_brief(lhs) + ";rhs=" + gens_brief(rhs);
                        }
                        std::vector<CheckResult> out{{"lemmas.edge-deletion", inst,
                                                      pass_fail(ok), observed, 0.0}};
                        return out;
                    });
                });
            }
        }

        // Colon by a pendant edge peels one symbolic power.
        for (int x : g.leaves()) {
            const int y = g.neighbors(x)[0];
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, g, code, x, y, s]() {
                    const std::string inst = "g6=" + code + ";pendant=" + std::to_string(x) +
                                             "-" + std::to_string(y) + ";s=" +
                                             std::to_string(s);
                    return guarded("lemmas.pendant-colon", inst, [&]() {
                        std::vector<Monomial::Exponent> xy(g.ambient(), 0);
                        xy[x - 1] = 1;
                        xy[y - 1] = 1;
                        const MonomialIdeal lhs = colon(symbolic_power(g, s), Monomial(xy));
                        const MonomialIdeal rhs = s == 1
                                                      ? MonomialIdeal::whole_ring(g.ambient())
                                                      : symbolic_power(g, s - 1);
                        const bool ok = lhs == rhs;
                        std::string observed = "lhs_gens=" + std::to_string(lhs.generator_count()) +
                                               ";rhs_gens=" + std::to_string(rhs.generator_count());
                        if (!ok) {
                            observed += ";lhs=" + gens_brief(lhs) + ";rhs=" + gens_brief(rhs);
                        }
                        std::vector<CheckResult> out{{"lemmas.pendant-colon", inst,
                                                      pass_fail(ok), observed, 0.0}};
                        return out;
                    });
                });
            }
        }

        // When every leaf hangs directly off the cycle, cutting the symbolic
        // power at degree 2s recovers the ordinary power exactly.
        bool applicable = false;
        try {
            const auto cyc = g.unique_cycle();
            if (cyc) {
                applicable = true;
                for (int x : g.leaves()) {
                    const auto d = g.distance_to_set(x, cyc->vertices);
                    if (!d || *d != 1) applicable = false;
                }
            }
        } catch (const NotUnicyclicError&) {
            applicable = false;
        }
        if (applicable) {
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, g, code, s]() {
                    const std::string inst = "g6=" + code + ";s=" + std::to_string(s);
                    return guarded("lemmas.power-truncation", inst, [&]() {
                        const MonomialIdeal lhs =
                            intersect_max_power(symbolic_power(g, s), 2 * s);
                        const MonomialIdeal rhs = power(edge_ideal(g), s);
                        const bool ok = lhs == rhs;
                        std::string observed = "lhs_gens=" + std::to_string(lhs.generator_count()) +
                                               ";rhs_gens=" + std::to_string(rhs.generator_count());
                        if (!ok) {
                            observed += ";lhs=" + gens_brief(lhs) + ";rhs=" + gens_brief(rhs);
                        }
                        std::vector<CheckResult> out{{"lemmas.power-truncation", inst,
                                                      pass_fail(ok), observed, 0.0}};
                        return out;
                    });
                });
            }
        }
    }
    return run_tasks(config, std::move(tasks));
}

namespace {

// Deterministic partition selection: always the empty and the full subset of
// the free edges, then counting order, up to the cap.
std::vector<std::uint64_t> partition_masks(std::size_t free_edges, int cap,
                                           std::optional<std::uint64_t> seed) {
    const std::uint64_t total =
        free_edges >= 63 ? ~std::uint64_t(0) : (std::uint64_t(1) << free_edges);
    std::vector<std::uint64_t> masks;
    std::set<std::uint64_t> seen;
    auto push = [&](std::uint64_t m) {
        if (seen.insert(m).second) masks.push_back(m);
    };
    push(0);
    if (free_edges > 0) push(total - 1);
    if (seed) {
        std::mt19937_64 rng(*seed);
        while (masks.size() < static_cast<std::size_t>(cap) && seen.size() < total) {
            push(rng() % total);
        }
    } else {
        for (std::uint64_t m = 1; masks.size() < static_cast<std::size_t>(cap) && m + 1 < total;
             ++m) {
            push(m);
        }
    }
    return masks;
}

}  // namespace

Report check_prop_sum(const Config& config) {
    config.validate();
    auto cache = std::make_shared<RegCache>();
    std::vector<Task> tasks;

    // Unicyclic partitions: the cycle always stays in the first part.
    for (const auto& g : corpus_graphs(config)) {
        std::optional<Cycle> cyc;
        try {
            cyc = g.unique_cycle();
        } catch (const NotUnicyclicError&) {
            continue;
        }
        if (!cyc) continue;
        const std::string code = encode_graph6(g);
        std::vector<std::pair<int, int>> free_edges;
        for (const auto& e : g.edges()) {
            if (!std::binary_search(cyc->edges.begin(), cyc->edges.end(), e)) {
                free_edges.push_back(e);
            }
        }
        const auto masks =
            partition_masks(free_edges.size(), config.partition_cap, std::nullopt);
        for (std::size_t pi = 0; pi < masks.size(); ++pi) {
            const std::uint64_t mask = masks[pi];
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, cache, g, code, cyc, free_edges, mask, pi, s]() {
                    const std::string inst = "g6=" + code + ";part=" + std::to_string(pi) +
                                             ";s=" + std::to_string(s);
                    return guarded("prop-sum.unicyclic-partition", inst + ";field=*", [&]() {
                        std::vector<std::pair<int, int>> h1_edges = cyc->edges;
                        std::vector<std::pair<int, int>> h2_edges;
                        for (std::size_t i = 0; i < free_edges.size(); ++i) {
                            if (mask & (std::uint64_t(1) << i)) {
                                h2_edges.push_back(free_edges[i]);
                            } else {
                                h1_edges.push_back(free_edges[i]);
                            }
                        }
                        const SimpleGraph h1 = g.edge_subgraph(h1_edges);
                        const SimpleGraph h2 = g.edge_subgraph(h2_edges);
                        const MonomialIdeal lhs_ideal = mixed_ideal(h1, s, h2);
                        const MonomialIdeal rhs_ideal = power(edge_ideal(g), s);
                        std::vector<CheckResult> out;
                        for (const auto& field : config.fields) {
                            const int rl = cache->get(lhs_ideal, field, config.lattice_cap);
                            const int rr = cache->get(rhs_ideal, field, config.lattice_cap);
                            const bool ok = rl <= rr;
                            std::string observed =
                                "mixed=" + std::to_string(rl) + ";power=" + std::to_string(rr) +
                                ";h2_edges=" + std::to_string(h2_edges.size());
                            if (!ok) {
                                observed += ";mixed_gens=" + gens_brief(lhs_ideal) +
                                            ";power_gens=" + gens_brief(rhs_ideal);
                            }
                            out.push_back({"prop-sum.unicyclic-partition",
                                           inst + ";field=" + field.str(), pass_fail(ok),
                                           observed, 0.0});
                        }
                        return out;
                    });
                });
            }
        }
    }

    // Forest partitions with ordinary powers on the first part.
    for (const auto& g : forest_corpus(std::min(config.max_n, config.forest_max_n))) {
        const std::string code = encode_graph6(g);
        const auto all_edges = g.edges();
        const auto masks = partition_masks(all_edges.size(), config.partition_cap,
                                           config.seed ^ all_edges.size());
        for (std::size_t pi = 0; pi < masks.size(); ++pi) {
            const std::uint64_t mask = masks[pi];
            for (int s = 1; s <= config.max_s; ++s) {
                tasks.push_back([&config, cache, g, code, all_edges, mask, pi, s]() {
                    const std::string inst = "g6=" + code + ";part=" + std::to_string(pi) +
                                             ";s=" + std::to_string(s);
                    return guarded("prop-sum.forest-partition", inst + ";field=*", [&]() {
                        std::vector<std::pair<int, int>> h1_edges, h2_edges;
                        for (std::size_t i = 0; i < all_edges.size(); ++i) {
                            if (mask & (std::uint64_t(1) << i)) {
                                h2_edges.push_back(all_edges[i]);
                            } else {
                                h1_edges.push_back(all_edges[i]);
                            }
                        }
                        const SimpleGraph h1 = g.edge_subgraph(h1_edges);
                        const SimpleGraph h2 = g.edge_subgraph(h2_edges);
                        const MonomialIdeal left =
                            h1.edge_count() == 0
                                ? MonomialIdeal::zero(g.ambient())
                                : power(edge_ideal(h1), static_cast<std::uint32_t>(s));
                        const MonomialIdeal lhs_ideal = sum(left, edge_ideal(h2));
                        const MonomialIdeal rhs_ideal = power(edge_ideal(g), s);
                        std::vector<CheckResult> out;
                        for (const auto& field : config.fields) {
                            const int rl = cache->get(lhs_ideal, field, config.lattice_cap);
                            const int rr = cache->get(rhs_ideal, field, config.lattice_cap);
                            const bool ok = rl <= rr;
                            std::string observed =
                                "mixed=" + std::to_string(rl) + ";power=" + std::to_string(rr) +
                                ";h2_edges=" + std::to_string(h2_edges.size());
                            if (!ok) {
                                observed += ";mixed_gens=" + gens_brief(lhs_ideal) +
                                            ";power_gens=" + gens_brief(rhs_ideal);
                            }
                            out.push_back({"prop-sum.forest-partition",
                                           inst + ";field=" + field.str(), pass_fail(ok),
                                           observed, 0.0});
                        }
                        return out;
                    });
                });
            }
        }
    }
    return run_tasks(config, std::move(tasks));
}

namespace {
enum class CorpusKind { Unicyclic, Forest, Other };
}

Report check_bounds(const Config& config) {
    config.validate();
    auto cache = std::make_shared<RegCache>();
    std::vector<Task> tasks;

    auto add_graph_checks = [&](const SimpleGraph& g, CorpusKind kind) {
        const std::string code = encode_graph6(g);
        std::optional<Cycle> cyc;
        if (kind == CorpusKind::Unicyclic) cyc = g.unique_cycle();
        const bool is_cycle =
            cyc && cyc->vertices.size() == static_cast<std::size_t>(g.vertex_count());

        tasks.push_back([&config, cache, g, code, kind]() {
            const std::string inst = "g6=" + code;
            return guarded("bounds.induced-matching-lower", inst + ";field=*", [&]() {
                const int nu = g.induced_matching_number();
                const MonomialIdeal I = edge_ideal(g);
                std::vector<CheckResult> out;
                for (const auto& field : config.fields) {
                    const int r = cache->get(I, field, config.lattice_cap);
                    const bool ok = r >= nu + 1;
                    out.push_back({"bounds.induced-matching-lower",
                                   inst + ";field=" + field.str(), pass_fail(ok),
                                   "reg=" + std::to_string(r) + ";nu=" + std::to_string(nu),
                                   0.0});
                    if (kind == CorpusKind::Unicyclic) {
                        const bool dok = r == nu + 1 || r == nu + 2;
                        out.push_back({"bounds.unicyclic-dichotomy",
                                       inst + ";field=" + field.str(), pass_fail(dok),
                                       "reg=" + std::to_string(r) + ";nu=" + std::to_string(nu),
                                       0.0});
                    }
                }
                return out;
            });
        });

        for (int s = 1; s <= config.max_s; ++s) {
            tasks.push_back([&config, cache, g, code, s, kind, is_cycle]() {
                const std::string inst = "g6=" + code + ";s=" + std::to_string(s);
                return guarded("bounds.power-lower", inst + ";field=*", [&]() {
                    const int nu = g.induced_matching_number();
                    const MonomialIdeal I = edge_ideal(g);
                    const MonomialIdeal Is = power(I, static_cast<std::uint32_t>(s));
                    std::vector<CheckResult> out;
                    for (const auto& field : config.fields) {
                        const int rs = cache->get(Is, field, config.lattice_cap);
                        const bool ok = rs >= 2 * s + nu - 1;
                        out.push_back({"bounds.power-lower", inst + ";field=" + field.str(),
                                       pass_fail(ok),
                                       "reg_power=" + std::to_string(rs) + ";nu=" +
                                           std::to_string(nu),
                                       0.0});
                        if (kind == CorpusKind::Unicyclic && !is_cycle && s >= 2) {
                            const int r1 = cache->get(I, field, config.lattice_cap);
                            const bool eok = rs == 2 * s + r1 - 2;
                            out.push_back({"bounds.non-cycle-power-formula",
                                           inst + ";field=" + field.str(), pass_fail(eok),
                                           "reg_power=" + std::to_string(rs) + ";reg=" +
                                               std::to_string(r1),
                                           0.0});
                        }
                        if (kind == CorpusKind::Forest) {
                            const bool fok = rs == 2 * s + nu - 1;
                            out.push_back({"bounds.forest-power-formula",
                                           inst + ";field=" + field.str(), pass_fail(fok),
                                           "reg_power=" + std::to_string(rs) + ";nu=" +
                                               std::to_string(nu),
                                           0.0});
                        }
                    }
                    return out;
                });
            });
        }
    };

    const CorpusKind base_kind =
        config.corpus == "unicyclic" ? CorpusKind::Unicyclic : CorpusKind::Other;
    for (const auto& g : corpus_graphs(config)) add_graph_checks(g, base_kind);
    for (const auto& g : forest_corpus(config.forest_max_n)) {
        add_graph_checks(g, CorpusKind::Forest);
    }

    // Cycles of length 2 mod 3 sit at the top of the dichotomy.
    for (int ell = 3; ell <= std::max(config.max_n, 8); ++ell) {
        if (ell % 3 != 2) continue;
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v <= ell; ++v) edges.emplace_back(v, v % ell + 1);
        const SimpleGraph cyc = SimpleGraph::from_edges(ell, edges);
        tasks.push_back([&config, cache, cyc, ell]() {
            const std::string inst = "ell=" + std::to_string(ell);
            return guarded("bounds.cycle-regularity", inst + ";field=*", [&]() {
                const int nu = cyc.induced_matching_number();
                const MonomialIdeal I = edge_ideal(cyc);
                std::vector<CheckResult> out;
                for (const auto& field : config.fields) {
                    const int r = cache->get(I, field, config.lattice_cap);
                    const bool ok = r == nu + 2;
                    out.push_back({"bounds.cycle-regularity", inst + ";field=" + field.str(),
                                   pass_fail(ok),
                                   "reg=" + std::to_string(r) + ";nu=" + std::to_string(nu),
                                   0.0});
                }
                return out;
            });
        });
    }
    return run_tasks(config, std::move(tasks));
}

Report check_case2_monotonicity(const Config& config) {
    config.validate();
    auto cache = std::make_shared<RegCache>();
    std::vector<Task> tasks;
    for (const auto& g : corpus_graphs(config)) {
        std::optional<Cycle> cyc;
        try {
            cyc = g.unique_cycle();
        } catch (const NotUnicyclicError&) {
            continue;
        }
        if (!cyc) continue;
        const std::string code = encode_graph6(g);
        const bool is_cycle = cyc->vertices.size() == static_cast<std::size_t>(g.vertex_count());
        tasks.push_back([&config, cache, g, code, cyc, is_cycle]() {
            const std::string inst = "g6=" + code;
            return guarded("case2.gamma-monotonicity", inst + ";field=*", [&]() {
                std::vector<CheckResult> out;
                const int nu = g.induced_matching_number();
                for (const auto& field : config.fields) {
                    const std::string finst = inst + ";field=" + field.str();
                    const int r =
                        cache->get(edge_ideal(g), field, config.lattice_cap);
                    if (r == nu + 1) {
                        out.push_back({"case2.gamma-monotonicity", finst, "skip",
                                       "first case applies (reg = nu+1)", 0.0});
                        continue;
                    }
                    if (is_cycle) {
                        out.push_back({"case2.gamma-monotonicity", finst, "skip",
                                       "cycle; equality known directly, no splitting set "
                                       "needed",
                                       0.0});
                        continue;
                    }
                    const int ell = static_cast<int>(cyc->vertices.size());
                    if (ell % 3 != 2) {
                        out.push_back({"case2.gamma-monotonicity", finst, "fail",
                                       "reg = nu+2 but cycle length " + std::to_string(ell) +
                                           " is not 2 mod 3",
                                       0.0});
                        continue;
                    }
                    // Exhaustive search for a splitting set: delete vertices
                    // outside the cycle so the cycle becomes its own component
                    // while the induced matching number is preserved.
                    std::vector<int> outside;
                    for (int v : g.vertices()) {
                        if (std::find(cyc->vertices.begin(), cyc->vertices.end(), v) ==
                            cyc->vertices.end()) {
                            outside.push_back(v);
                        }
                    }
                    std::vector<int> gamma;
                    bool found = false;
                    const std::size_t m = outside.size();
                    std::vector<std::vector<int>> subsets;
                    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
                        std::vector<int> sub;
                        for (std::size_t i = 0; i < m; ++i) {
                            if (mask & (std::uint64_t(1) << i)) sub.push_back(outside[i]);
                        }
                        subsets.push_back(std::move(sub));
                    }
                    std::sort(subsets.begin(), subsets.end(),
                              [](const auto& a, const auto& b) {
                                  if (a.size() != b.size()) return a.size() < b.size();
                                  return a < b;
                              });
                    for (const auto& sub : subsets) {
                        const SimpleGraph rest = g.delete_vertices(sub);
                        // The cycle must be exactly one connected component.
                        bool component = true;
                        for (int v : cyc->vertices) {
                            if (!rest.has_vertex(v)) {
                                component = false;
                                break;
                            }
                            for (int w : rest.neighbors(v)) {
                                if (std::find(cyc->vertices.begin(), cyc->vertices.end(),
                                              w) == cyc->vertices.end()) {
                                    component = false;
                                    break;
                                }
                            }
                        }
                        if (!component) continue;
                        if (rest.induced_matching_number() != nu) continue;
                        gamma = sub;
                        found = true;
                        break;
                    }
                    if (!found) {
                        out.push_back({"case2.gamma-monotonicity", finst, "fail",
                                       "no splitting set found (anomaly)", 0.0});
                        continue;
                    }
                    std::string gamma_str = "{";
                    for (std::size_t i = 0; i < gamma.size(); ++i) {
                        if (i) gamma_str += ",";
                        gamma_str += std::to_string(gamma[i]);
                    }
                    gamma_str += "}";
                    for (int s = 1; s <= config.max_s; ++s) {
                        const MonomialIdeal sym = symbolic_power(g, s);
                        const int rs = cache->get(sym, field, config.lattice_cap);
                        bool ok = rs >= 2 * s + nu;
                        std::string observed = "reg_sym=" + std::to_string(rs) +
                                               ";nu=" + std::to_string(nu) +
                                               ";gamma=" + gamma_str;
                        if (config.case2_intermediate) {
                            const SimpleGraph rest = g.delete_vertices(gamma);
                            const MonomialIdeal sym_rest = symbolic_power(rest, s);
                            const int rr = cache->get(sym_rest, field, config.lattice_cap);
                            const SimpleGraph forest =
                                rest.delete_vertices(cyc->vertices);
                            const SimpleGraph cycle_only =
                                g.induced_subgraph(cyc->vertices);
                            const int rc = cache->get(edge_ideal(cycle_only), field,
                                                      config.lattice_cap);
                            int rhs2 = rc - 1;
                            if (forest.edge_count() > 0) {
                                rhs2 += cache->get(
                                    power(edge_ideal(forest),
                                          static_cast<std::uint32_t>(s)),
                                    field, config.lattice_cap);
                            }
                            ok = ok && rs >= rr && rr >= rhs2;
                            observed += ";reg_split=" + std::to_string(rr) +
                                        ";chain_rhs=" + std::to_string(rhs2);
                        }
                        out.push_back({"case2.gamma-monotonicity",
                                       finst + ";s=" + std::to_string(s), pass_fail(ok),
                                       observed, 0.0});
                    }
                }
                return out;
            });
        });
    }
    return run_tasks(config, std::move(tasks));
}

namespace {

// Instances that carry ";n=<int>" and ";s=<int>" markers roll up into a
// per-(n, s) pass-count block in the JSON report.
std::optional<std::pair<int, int>> parse_ns(const std::string& inst) {
    auto grab = [&](const char* tag) -> std::optional<int> {
        const auto p = inst.find(tag);
        if (p == std::string::npos) return std::nullopt;
        std::size_t q = p + std::string(tag).size();
        int v = 0;
        bool any = false;
        while (q < inst.size() && inst[q] >= '0' && inst[q] <= '9') {
            v = v * 10 + (inst[q] - '0');
            ++q;
            any = true;
        }
        if (!any) return std::nullopt;
        return v;
    };
    const auto n = grab(";n=");
    const auto s = grab(";s=");
    if (n && s) return std::make_pair(*n, *s);
    return std::nullopt;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

void write_json(const Report& report, std::ostream& out, bool timing) {
    nlohmann::ordered_json j;
    j["header"] = {{"tool", report.tool},
                   {"version", report.version},
                   {"config", report.config},
                   {"timestamp", report.timestamp},
                   {"total_elapsed_s", report.total_elapsed}};
    j["summary"] = {{"pass", report.count("pass")},
                    {"fail", report.count("fail")},
                    {"skip", report.count("skip")}};
    std::map<std::pair<int, int>, std::array<std::size_t, 3>> agg;
    for (const auto& r : report.results) {
        if (const auto ns = parse_ns(r.instance)) {
            auto& row = agg[*ns];
            if (r.status == "pass") ++row[0];
            else if (r.status == "fail") ++row[1];
            else ++row[2];
        }
    }
    if (!agg.empty()) {
        nlohmann::ordered_json block;
        for (const auto& [ns, counts] : agg) {
            const std::string key =
                "n=" + std::to_string(ns.first) + ";s=" + std::to_string(ns.second);
            block[key] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}};
        }
        j["aggregates"] = std::move(block);
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : report.results) {
        nlohmann::ordered_json row = {{"check_id", r.check_id},
                                      {"instance", r.instance},
                                      {"status", r.status},
                                      {"observed", r.observed}};
        if (timing) row["elapsed_s"] = r.elapsed;
        rows.push_back(std::move(row));
    }
    j["results"] = std::move(rows);
    out << j.dump(2) << "\n";
}

void write_csv(const Report& report, std::ostream& out, bool timing) {
    out << "check_id,instance,status,observed";
    if (timing) out << ",elapsed_s";
    out << "\n";
    for (const auto& r : report.results) {
        out << csv_escape(r.check_id) << "," << csv_escape(r.instance) << ","
            << csv_escape(r.status) << "," << csv_escape(r.observed);
        if (timing) out << "," << r.elapsed;
        out << "\n";
    }
}

int report_exit_code(const Report& report) { return report.has_failures() ? 1 : 0; }

}  // namespace eideal
