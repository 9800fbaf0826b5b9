#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lm/arrangements.hpp"
#include "lm/complex.hpp"
#include "lm/group.hpp"

namespace lm {

// A cluster of X: base coset Fg and independent special forms, sorted by first subscript.
struct XPiece {
    GroupWord base{Tag::G};
    std::vector<SpecialForm> params;
};

struct XCluster {
    XPiece piece;
    Tag tag = Tag::G;
    Cluster cluster;
    std::vector<GroupWord> labels;  // per 0-cell of the cluster
};

// Tree-ordered signed product over the parameters where the two subsets differ.
std::optional<SpecialForm> connecting_form(const std::vector<SpecialForm>& params, const std::vector<int>& from,
                                           const std::vector<int>& to);

XCluster build_x_cluster(const GroupWord& base, std::vector<SpecialForm> params);

// Finite piece of X. Vertex cells come first, sorted by canonical coset key.
struct XComplex {
    Tag tag = Tag::G;
    CellComplex complex;
    std::vector<GroupWord> labels;  // per vertex
    std::vector<std::string> keys;  // per vertex

    std::size_t vertex_count() const { return keys.size(); }
    std::optional<int> vertex(const std::string& key) const;
    std::vector<int> neighbors(int v) const;
};

std::string vertex_name(const std::string& coset_key);

XComplex assemble(const std::vector<XPiece>& pieces, const RewriteOptions& opts = {});

struct MorseValue {
    long h = 0;
    long f = 0;
    friend auto operator<=>(const MorseValue&, const MorseValue&) = default;
};

MorseValue morse_value(const XComplex& cx, int v);
std::vector<MorseValue> morse_values(const XComplex& cx);
bool verify_morse(const XComplex& cx);
bool verify_morse(const XComplex& cx, const std::vector<MorseValue>& values);

// The (h,f)-minimal vertex of a cell.
int minimal_vertex(const XComplex& cx, const std::vector<MorseValue>& values, int cell);

// One link cell per cell of cx other than v whose (h,f)-minimum is v.
CellComplex ascending_link(const XComplex& cx, int v);
CellComplex ascending_link(const XComplex& cx, int v, const std::vector<MorseValue>& values);

struct ConeVertex {
    unsigned m = 0;
    bool verified = false;
    std::vector<XPiece> enlarged;  // each piece with y_{0^m 1} added
};

ConeVertex find_cone_vertex(const std::vector<XPiece>& pieces, const RewriteOptions& opts = {});

}  // namespace lm
