#ifndef EIDEAL_SIMPLICIAL_HPP
#define EIDEAL_SIMPLICIAL_HPP

#include <vector>

#include "eideal/field.hpp"

namespace eideal {

// Abstract simplicial complex on a ground set of variable indices, stored as
// its maximal faces.  The void complex (no faces at all) and the empty
// complex {∅} are distinct values: only the former has vanishing reduced
// homology everywhere.
class SimplicialComplex {
  public:
    static SimplicialComplex void_complex(std::vector<int> ground);
    static SimplicialComplex empty_complex(std::vector<int> ground);
    // Faces need not be maximal or sorted; they are normalized here.
    static SimplicialComplex from_faces(std::vector<int> ground,
                                        std::vector<std::vector<int>> faces);

    bool is_void() const { return is_void_; }
    const std::vector<int>& ground() const { return ground_; }
    // Sorted list of sorted maximal faces; empty when the complex is {∅} or void.
    const std::vector<std::vector<int>>& maximal_faces() const { return maximal_; }

    // Dimension: size of largest face minus one; -1 for {∅}.  Void complex
    // has no faces, reported as -2 so dim+1 gives an empty chain range.
    int dim() const;

    // All faces grouped by dimension: result[k] lists the (k-1)-dimensional
    // faces, so result[0] = {∅}.  Faces and groups sorted.  Empty for void.
    std::vector<std::vector<std::vector<int>>> faces_by_dim() const;

    bool operator==(const SimplicialComplex& other) const;

  private:
    SimplicialComplex(std::vector<int> ground, std::vector<std::vector<int>> maximal,
                      bool is_void)
        : ground_(std::move(ground)), maximal_(std::move(maximal)), is_void_(is_void) {}

    std::vector<int> ground_;
    std::vector<std::vector<int>> maximal_;
    bool is_void_;
};

// Ranks of reduced simplicial homology over the field; res[k] is the rank in
// homological index k−1, so res[0] reports index −1.  Void complex → all
// zeros (empty vector); {∅} → {1}.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& K,
                                                const Field& field);

}  // namespace eideal

#endif
