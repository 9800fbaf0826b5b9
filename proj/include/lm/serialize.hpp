#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lm/arrangements.hpp"
#include "lm/complex.hpp"
#include "lm/xcomplex.hpp"

namespace lm {

inline constexpr int kJsonFormat = 1;

// {"format", "counts", "euler", "cells": [{dim, key, faces}]}
nlohmann::json complex_json(const CellComplex& cx);
// Cells also carry their sign vector.
nlohmann::json cluster_json(const Cluster& c);
// Vertex cells also carry their label and Morse value.
nlohmann::json xcomplex_json(const XComplex& cx);
nlohmann::json homology_json(const std::vector<HomologyGroup>& groups);

// 1-skeleton as an undirected graph.
std::string complex_dot(const CellComplex& cx);
// Vertices grouped into ranks by height.
std::string xcomplex_dot(const XComplex& cx);

}  // namespace lm
