#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lm/complex.hpp"
#include "lm/words.hpp"

namespace lm {

// All type-1 walls of [0,1]^n plus the diagonals x_i = x_{i+1} for the marked i (1-based).
class Arrangement {
public:
    static constexpr int kMaxDimension = 12;

    Arrangement(int n, std::vector<int> diagonals);

    int n() const { return n_; }
    const std::vector<int>& diagonals() const { return diagonals_; }
    bool marked(int i) const;
    std::string str() const;
    friend bool operator==(const Arrangement&, const Arrangement&) = default;

private:
    int n_;
    std::vector<int> diagonals_;
};

enum class Pos : std::uint8_t { Zero, One, Interior };
enum class Rel : std::uint8_t { Less, Equal, Greater };

// A relatively open cell: a position per coordinate and a relation per marked diagonal.
struct SignCell {
    std::vector<Pos> pos;
    std::vector<Rel> rel;  // parallel to Arrangement::diagonals()

    int dim(const Arrangement& a) const;  // number of Interior classes under Equal
    std::string key() const;
    static SignCell parse(const std::string& key, const Arrangement& a);
    friend bool operator==(const SignCell&, const SignCell&) = default;
};

bool satisfiable(const SignCell& c, const Arrangement& a);
// c lies in the closure of d.
bool face_of(const SignCell& c, const SignCell& d, const Arrangement& a);

// Cells are sorted by (dimension, key); signs[i] describes complex[i].
struct Cluster {
    Arrangement arrangement{1, {}};
    std::vector<SignCell> signs;
    CellComplex complex;

    std::vector<int> point(int vertex) const;  // 0/1 coordinates of a 0-cell
};

Cluster enumerate_cells(const Arrangement& a);

// One hyperplane of an arrangement: x_i = 0, x_i = 1, or x_i = x_{i+1}.
struct Wall {
    enum class Kind { Zero, One, Diagonal } kind;
    int i;
    std::string str() const;
};

enum class SubclusterKind { Facial, Diagonal };
std::string subcluster_kind_name(SubclusterKind k);

struct Subcluster {
    Cluster cluster;  // on the inherited coordinates
    SubclusterKind kind;
    std::vector<int> embedding;  // cell index in the parent cluster, per cell
};

Subcluster subcluster(const Arrangement& a, const std::vector<Wall>& flat);

// Each cell, as a rational polytope, is the convex hull of its 0-faces, which are exactly
// its extreme points.
bool verify_convex_cells(const Cluster& c);

}  // namespace lm
