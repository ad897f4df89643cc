#include "eideal/betti.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "eideal/linalg.hpp"
#include "eideal/parallel.hpp"

namespace eideal {

namespace {

using Exps = std::vector<Monomial::Exponent>;

void check_proper(const MonomialIdeal& I) {
    if (I.is_zero()) throw ArgumentError("ideal must be nonzero");
    if (I.is_whole_ring()) throw ArgumentError("ideal must be proper (not the unit ideal)");
}

std::uint64_t total_degree(const Exps& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

}  // namespace

LcmLattice lcm_lattice(const MonomialIdeal& I, std::size_t cap) {
    check_proper(I);
    LcmLattice lat;
    lat.vars = I.vars();
    std::unordered_set<Exps, ExponentVectorHash> seen;
    std::vector<Exps> elements;
    for (const auto& g : I.generators()) {
        const Exps& ge = g.exponents();
        // Fold the new generator into the closure: join it with everything
        // collected so far.  The result stays join-closed after each step.
        std::vector<Exps> fresh;
        if (seen.insert(ge).second) fresh.push_back(ge);
        for (const auto& e : elements) {
            Exps j(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) j[i] = std::max(e[i], ge[i]);
            if (seen.insert(j).second) fresh.push_back(std::move(j));
        }
        for (auto& f : fresh) elements.push_back(std::move(f));
        if (elements.size() > cap) {
            throw ResourceError("lcm lattice exceeds the cap of " + std::to_string(cap) +
                                " elements");
        }
    }
    std::sort(elements.begin(), elements.end());
    lat.elements = std::move(elements);
    return lat;
}

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& alpha) {
    if (alpha.vars() != I.vars()) {
        throw DimensionError("multidegree has " + std::to_string(alpha.vars()) +
                             " variables, ideal has " + std::to_string(I.vars()));
    }
    const std::vector<int> supp = alpha.support();
    const std::size_t k = supp.size();
    if (!I.contains(alpha)) {
        return SimplicialComplex::void_complex(supp);
    }
    // Faces are downward closed, so grow level by level: a candidate W∪{v}
    // is tested only if all its subsets one level down are faces.
    std::vector<std::uint32_t> level{0};  // the empty face
    std::unordered_set<std::uint32_t> face_set{0};
    std::vector<std::vector<int>> faces{{}};
    while (!level.empty()) {
        std::vector<std::uint32_t> next;
        for (const std::uint32_t w : level) {
            const int start = w == 0 ? 0 : 32 - std::countl_zero(w);
            for (std::size_t v = start; v < k; ++v) {
                const std::uint32_t cand = w | (1u << v);
                bool closed = true;
                for (std::size_t u = 0; closed && u < k; ++u) {
                    if ((cand >> u) & 1) {
                        closed = face_set.count(cand & ~(1u << u)) > 0;
                    }
                }
                if (!closed) continue;
                Exps e = alpha.exponents();
                for (std::size_t u = 0; u < k; ++u) {
                    if ((cand >> u) & 1) e[supp[u]] -= 1;
                }
                if (!I.contains(Monomial(e))) continue;
                face_set.insert(cand);
                next.push_back(cand);
                std::vector<int> face;
                for (std::size_t u = 0; u < k; ++u) {
                    if ((cand >> u) & 1) face.push_back(supp[u]);
                }
                faces.push_back(std::move(face));
            }
        }
        level = std::move(next);
    }
    return SimplicialComplex::from_faces(supp, std::move(faces));
}

bool BettiKey::operator<(const BettiKey& other) const {
    if (i != other.i) return i < other.i;
    const auto da = total_degree(alpha), db = total_degree(other.alpha);
    if (da != db) return da < db;
    return alpha < other.alpha;
}

void BettiTable::add(int i, std::vector<Monomial::Exponent> alpha, std::size_t rank) {
    if (rank == 0) return;
    entries_[BettiKey{i, std::move(alpha)}] += rank;
}

int BettiTable::regularity() const {
    if (entries_.empty()) throw ArgumentError("empty Betti table has no regularity");
    long long best = std::numeric_limits<long long>::min();
    for (const auto& [key, rank] : entries_) {
        best = std::max(best, static_cast<long long>(total_degree(key.alpha)) - key.i);
    }
    return static_cast<int>(best);
}

std::string BettiTable::str() const {
    std::ostringstream os;
    for (const auto& [key, rank] : entries_) {
        os << key.i << " " << total_degree(key.alpha) << " ";
        for (std::size_t j = 0; j < key.alpha.size(); ++j) {
            if (j) os << ",";
            os << key.alpha[j];
        }
        os << " " << rank << "\n";
    }
    return os.str();
}

BettiTable betti_table(const MonomialIdeal& I, const Field& field, int jobs,
                       std::size_t lattice_cap) {
    check_proper(I);
    const LcmLattice lat = lcm_lattice(I, lattice_cap);
    const std::size_t count = lat.elements.size();
    std::vector<std::vector<std::pair<int, std::size_t>>> per_alpha(count);
    parallel_for(count, jobs, [&](std::size_t idx) {
        // A complex containing its full support set is a simplex: contractible,
        // no homology, no Betti contribution.  One divisibility test.
        Exps cofree = lat.elements[idx];
        for (auto& x : cofree) {
            if (x > 0) x -= 1;
        }
        if (I.contains(Monomial(cofree))) return;
        const Monomial alpha(lat.elements[idx]);
        const SimplicialComplex K = upper_koszul(I, alpha);
        const auto ranks = reduced_homology_ranks(K, field);
        for (std::size_t j = 0; j < ranks.size(); ++j) {
            if (ranks[j] > 0) per_alpha[idx].emplace_back(static_cast<int>(j), ranks[j]);
        }
    });
    BettiTable table(I.vars());
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (const auto& [i, rank] : per_alpha[idx]) {
            table.add(i, lat.elements[idx], rank);
        }
    }
    return table;
}

int regularity(const MonomialIdeal& I, const Field& field, int jobs,
               std::size_t lattice_cap) {
    return betti_table(I, field, jobs, lattice_cap).regularity();
}

namespace {

// Chain data of one multidegree strand of the Taylor complex: subsets of the
// generator index set whose lcm is exactly α, graded by cardinality.
struct Strand {
    std::vector<std::vector<std::uint32_t>> by_size;  // by_size[j]: masks with j bits
};

}  // namespace

std::optional<BettiTable> taylor_strand_betti(const MonomialIdeal& I, const Field& field,
                                              std::size_t gen_cap) {
    check_proper(I);
    const auto& gens = I.generators();
    const std::size_t r = gens.size();
    if (r > gen_cap) return std::nullopt;
    const int n = I.vars();

    std::vector<Exps> lcm_of(std::size_t(1) << r);
    lcm_of[0] = Exps(n, 0);
    std::unordered_map<Exps, Strand, ExponentVectorHash> strands;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
        const std::uint32_t low = mask & (mask - 1);
        const std::size_t g = std::countr_zero(mask);
        const Exps& ge = gens[g].exponents();
        Exps e = lcm_of[low];
        if (low == 0) {
            e = ge;
        } else {
            for (int i = 0; i < n; ++i) e[i] = std::max(e[i], ge[i]);
        }
        lcm_of[mask] = e;
        Strand& s = strands[std::move(e)];
        const std::size_t sz = std::popcount(mask);
        if (s.by_size.size() <= sz) s.by_size.resize(sz + 1);
        s.by_size[sz].push_back(mask);
    }

    BettiTable table(n);
    for (auto& [alpha, strand] : strands) {
        auto& groups = strand.by_size;
        // Index of each mask within its cardinality class, for matrix columns.
        std::unordered_map<std::uint32_t, std::size_t> pos;
        for (const auto& group : groups) {
            for (std::size_t p = 0; p < group.size(); ++p) pos[group[p]] = p;
        }
        // bd[j]: rank of the strand differential from cardinality j to j−1
        // (faces leaving the strand are cut, which is exactly the α-graded
        // piece of the Taylor differential).
        std::vector<std::size_t> bd(groups.size() + 1, 0);
        for (std::size_t j = 1; j < groups.size(); ++j) {
            const auto& cols = groups[j];
            const auto& rows = groups[j - 1];
            if (cols.empty() || rows.empty()) continue;
            IntMatrix m(rows.size(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const std::uint32_t mask = cols[c];
                int sign = 1;
                std::uint32_t rest = mask;
                while (rest) {
                    const std::uint32_t b = rest & (-rest);
                    const std::uint32_t sub = mask & ~b;
                    if (lcm_of[sub] == alpha) {
                        m.at(pos[sub], c) = sign;
                    }
                    sign = -sign;
                    rest &= rest - 1;
                }
            }
            bd[j] = rank(m, field);
        }
        // β_{i,α}(I) = H_{i+1} of the strand (Taylor resolves the quotient
        // ring, shifting homological degree by one).
        for (std::size_t j = 1; j < groups.size(); ++j) {
            const std::size_t h = groups[j].size() - bd[j] - bd[j + 1];
            if (h > 0) table.add(static_cast<int>(j) - 1, alpha, h);
        }
    }
    return table;
}

}  // namespace eideal
