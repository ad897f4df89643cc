#include "eideal/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eideal/errors.hpp"
#include "eideal/linalg.hpp"

namespace eideal {

SimplicialComplex SimplicialComplex::void_complex(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    return SimplicialComplex(std::move(ground), {}, true);
}

SimplicialComplex SimplicialComplex::empty_complex(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    return SimplicialComplex(std::move(ground), {}, false);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<int> ground,
                                                std::vector<std::vector<int>> faces) {
    std::sort(ground.begin(), ground.end());
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    // Drop faces contained in another face.
    std::sort(faces.begin(), faces.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> maximal;
    for (const auto& f : faces) {
        bool contained = false;
        for (const auto& m : maximal) {
            if (std::includes(m.begin(), m.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }
    // The empty face alone denotes {∅}; drop it if any nonempty face exists.
    bool only_empty = true;
    for (const auto& m : maximal) {
        if (!m.empty()) only_empty = false;
    }
    if (only_empty) return empty_complex(std::move(ground));
    maximal.erase(std::remove_if(maximal.begin(), maximal.end(),
                                 [](const auto& f) { return f.empty(); }),
                  maximal.end());
    std::sort(maximal.begin(), maximal.end());
    return SimplicialComplex(std::move(ground), std::move(maximal), false);
}

int SimplicialComplex::dim() const {
    if (is_void_) return -2;
    int d = -1;
    for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<std::vector<int>>> SimplicialComplex::faces_by_dim() const {
    if (is_void_) return {};
    const int top = dim();
    std::vector<std::set<std::vector<int>>> groups(top + 2);
    groups[0].insert(std::vector<int>{});
    for (const auto& m : maximal_) {
        // All subsets of m.
        const std::size_t k = m.size();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> f;
            for (std::size_t i = 0; i < k; ++i) {
                if (mask & (1u << i)) f.push_back(m[i]);
            }
            groups[f.size()].insert(std::move(f));
        }
    }
    std::vector<std::vector<std::vector<int>>> out(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        out[i].assign(groups[i].begin(), groups[i].end());
    }
    return out;
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    return is_void_ == other.is_void_ && ground_ == other.ground_ &&
           maximal_ == other.maximal_;
}

namespace {

// Signed boundary matrix from (k)-element faces (columns) to (k−1)-element
// faces (rows); face lists must be sorted so column order is deterministic.
IntMatrix boundary_matrix(const std::vector<std::vector<int>>& rows,
                          const std::vector<std::vector<int>>& cols) {
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& face = cols[c];
        int sign = 1;
        for (std::size_t k = 0; k < face.size(); ++k) {
            std::vector<int> sub;
            sub.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i) {
                if (i != k) sub.push_back(face[i]);
            }
            auto it = row_index.find(sub);
            if (it == row_index.end()) {
                throw Error("boundary face missing from complex (not downward closed)");
            }
            m.at(it->second, c) = sign;
            sign = -sign;
        }
    }
    return m;
}

}  // namespace

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                const Field& field) {
    if (K.is_void()) return {};
    const auto groups = K.faces_by_dim();  // groups[k] = (k−1)-dimensional faces
    const std::size_t levels = groups.size();
    // ranks[k] = rank of the boundary map from groups[k] into groups[k−1].
    std::vector<std::size_t> bd_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        bd_rank[k] = rank(boundary_matrix(groups[k - 1], groups[k]), field);
    }
    std::vector<std::size_t> res(levels, 0);
    for (std::size_t k = 0; k < levels; ++k) {
        const std::size_t chains = groups[k].size();
        res[k] = chains - bd_rank[k] - bd_rank[k + 1];
    }
    return res;
}

}  // namespace eideal
