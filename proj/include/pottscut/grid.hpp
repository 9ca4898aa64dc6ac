// Grid graphs over m x n pixel lattices: canonical edge ordering, edge
// labelings, connected components of dormant edges, unit-square cycles.
#pragma once

#include <array>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pottscut/image.hpp"

namespace pottscut {

// Binary vector over the edges of a GridGraph, in canonical edge order.
// 1 = active (segment boundary), 0 = dormant (endpoints share a segment).
using EdgeLabeling = Eigen::VectorXi;

// Four edge indices forming a unit square, ordered
// [top row edge, bottom row edge, left column edge, right column edge].
using FourCycle = std::array<int, 4>;

// 4-connected grid over m x n pixels.
//
// Canonical orderings, fixed once so labelings, MILP variable order and
// golden files stay stable:
//   pixel (i,j)            -> id i*n + j                    (row-major)
//   row edge  (i,j)-(i,j+1) -> index i*(n-1) + j             (row-major)
//   col edge  (i,j)-(i+1,j) -> index m*(n-1) + i*n + j       (row-major,
//                              after the row-edge block)
struct GridGraph {
    int m = 0;  // rows
    int n = 0;  // cols
    // endpoints per edge in canonical order, each {u, v} with u < v
    std::vector<std::array<int, 2>> edges;

    int num_pixels() const { return m * n; }
    int num_row_edges() const { return m * (n - 1); }
    int num_col_edges() const { return (m - 1) * n; }
    int num_edges() const { return num_row_edges() + num_col_edges(); }

    int pixel(int i, int j) const { return i * n + j; }
    std::pair<int, int> pixel_coords(int p) const { return {p / n, p % n}; }

    int row_edge(int i, int j) const { return i * (n - 1) + j; }
    int col_edge(int i, int j) const { return num_row_edges() + i * n + j; }
    bool is_row_edge(int e) const { return e < num_row_edges(); }

    const std::array<int, 2>& endpoints(int e) const { return edges[e]; }
};

// Pixel partition; labels are 0..k-1 in row-major first-pixel discovery order.
struct Segmentation {
    Eigen::MatrixXi labels;
    int k = 0;
};

GridGraph build_grid_graph(int m, int n);

// Maximal sets of pixels connected by dormant edges become segments.
Segmentation connected_components(const GridGraph& graph, const EdgeLabeling& labeling);

// All (m-1)*(n-1) unit squares in row-major order.
std::vector<FourCycle> enumerate_four_cycles(const GridGraph& graph);

// c_e = |y_u - y_v| per edge, canonical order.
Eigen::VectorXd contrast_weights(const Image& image, const GridGraph& graph);

// Number of segments on a chain: sum of active edges plus one.
// The graph must be a chain (m == 1 or n == 1).
int count_segments_1d(const GridGraph& graph, const EdgeLabeling& labeling);

}  // namespace pottscut
