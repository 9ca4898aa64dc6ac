#include "pottscut/grid.hpp"

#include <stdexcept>

#include "pottscut/union_find.hpp"

namespace pottscut {

GridGraph build_grid_graph(int m, int n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    GridGraph g;
    g.m = m;
    g.n = n;
    g.edges.reserve(static_cast<std::size_t>(g.num_edges()));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j + 1 < n; ++j)
            g.edges.push_back({g.pixel(i, j), g.pixel(i, j + 1)});
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j < n; ++j)
            g.edges.push_back({g.pixel(i, j), g.pixel(i + 1, j)});
    return g;
}

Segmentation connected_components(const GridGraph& graph, const EdgeLabeling& labeling) {
    if (labeling.size() != graph.num_edges())
        throw std::invalid_argument("labeling length does not match edge count");

    DisjointSets sets(graph.num_pixels());
    for (int e = 0; e < graph.num_edges(); ++e)
        if (labeling[e] == 0) sets.merge(graph.edges[e][0], graph.edges[e][1]);

    Segmentation seg;
    seg.labels.resize(graph.m, graph.n);
    std::vector<int> label_of_root(static_cast<std::size_t>(graph.num_pixels()), -1);
    int next = 0;
    for (int p = 0; p < graph.num_pixels(); ++p) {  // row-major discovery order
        const int root = sets.find(p);
        if (label_of_root[root] < 0) label_of_root[root] = next++;
        seg.labels(p / graph.n, p % graph.n) = label_of_root[root];
    }
    seg.k = next;
    return seg;
}

std::vector<FourCycle> enumerate_four_cycles(const GridGraph& graph) {
    std::vector<FourCycle> cycles;
    cycles.reserve(static_cast<std::size_t>((graph.m - 1) * (graph.n - 1)));
    for (int i = 0; i + 1 < graph.m; ++i)
        for (int j = 0; j + 1 < graph.n; ++j)
            cycles.push_back({graph.row_edge(i, j), graph.row_edge(i + 1, j),
                              graph.col_edge(i, j), graph.col_edge(i, j + 1)});
    return cycles;
}

Eigen::VectorXd contrast_weights(const Image& image, const GridGraph& graph) {
    if (image.rows() != graph.m || image.cols() != graph.n)
        throw std::invalid_argument("image dimensions do not match grid");
    Eigen::VectorXd c(graph.num_edges());
    for (int e = 0; e < graph.num_edges(); ++e) {
        const auto [u, v] = graph.edges[e];
        c[e] = std::abs(image(u / graph.n, u % graph.n) - image(v / graph.n, v % graph.n));
    }
    return c;
}

int count_segments_1d(const GridGraph& graph, const EdgeLabeling& labeling) {
    if (graph.m != 1 && graph.n != 1)
        throw std::invalid_argument("count_segments_1d requires a chain graph");
    if (labeling.size() != graph.num_edges())
        throw std::invalid_argument("labeling length does not match edge count");
    return labeling.sum() + 1;
}

}  // namespace pottscut
