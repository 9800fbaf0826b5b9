#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lm {

// A finite regular CW complex given by its face poset. Cells are added in order of
// nondecreasing dimension, each with its codimension-one faces.
class CellComplex {
public:
    struct Cell {
        int dim = 0;
        std::string key;
        std::vector<int> facets;
        std::vector<int> vertices;  // sorted indices of the 0-cells in the closure
    };

    int add(int dim, std::string key, std::vector<int> facets);

    std::size_t size() const { return cells_.size(); }
    const Cell& operator[](std::size_t i) const { return cells_[i]; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::optional<int> find(const std::string& key) const;

    int dimension() const;  // -1 when empty
    std::vector<std::size_t> counts() const;
    long euler() const;
    std::vector<std::vector<int>> cofacets() const;

    // Closure of the given cells, re-indexed.
    CellComplex closure(const std::vector<int>& cells) const;

private:
    std::vector<Cell> cells_;
    std::unordered_map<std::string, int> index_;
};

struct HomologyGroup {
    int degree = 0;
    long rank = 0;
    std::vector<long> torsion;
    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
};

// Integer incidence numbers [cell : facet], one per facet, from a coherent orientation.
std::vector<std::vector<int>> incidence_signs(const CellComplex& cx);

// Reduced integral homology in degrees -1 .. dim, by Smith normal form.
std::vector<HomologyGroup> reduced_homology(const CellComplex& cx);
bool homology_trivial(const CellComplex& cx);

// Greedy elementary collapses, lowest dimension first with key tie-break. True when the
// complex collapses to a single vertex; false is inconclusive.
bool is_collapsible(const CellComplex& cx);

}  // namespace lm
