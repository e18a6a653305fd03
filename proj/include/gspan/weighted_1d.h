#pragma once
// Additively weighted spanners on a line.

#include <stdexcept>
#include <vector>

namespace gspan {

struct InvalidOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WeightedSite1D {
    double pos = 0;
    double weight = 0;
    int origin = -1;
};

// w(p) + |pos_p - pos_q| + w(q), and 0 for the same site.
double weighted_distance(const std::vector<WeightedSite1D>& s, int a, int b);

struct Edge1D {
    int a = -1, b = -1;  // site indices; b is the center a attaches to
    int depth = 0;       // recursion depth that created the edge
    int group_level = 0; // level of a's group in the group tree (1 = just below the root)
};

struct Spanner1D {
    std::vector<Edge1D> edges;
};

// Split by a point O of zero weight. Positions tie-break by site index, so at most one
// site lies on O.
struct Split1D {
    double O = 0;
    std::vector<int> left, right, on_line;
};
Split1D split_point(const std::vector<WeightedSite1D>& s, const std::vector<int>& subset);
Split1D split_point(const std::vector<WeightedSite1D>& s);

Spanner1D build_2spanner(const std::vector<WeightedSite1D>& s);

// Groups of one recursion node: node 0 is the root holding every site of the node.
struct GroupTree {
    struct Node {
        int begin = 0, end = 0;  // member range in `order`
        int center = -1;
        int level = 0;
        int parent = -1;
        std::vector<int> children;
    };
    int depth = 0;
    double O = 0;
    std::vector<int> order;  // sites of this recursion node in traversal order
    std::vector<Node> nodes;

    int height() const;
    std::vector<int> members(int node) const;
};

struct GroupedSpanner1D {
    Spanner1D spanner;
    std::vector<GroupTree> trees;  // one per recursion node, preorder
};

// order: permutation of site indices; consecutive runs of it form the groups. For k > 1 the
// center of a recursion node is passed on to its half, so every pair is split by some O.
GroupedSpanner1D build_grouped_spanner(const std::vector<WeightedSite1D>& s, const std::vector<int>& order, int k);

// All-pairs shortest path lengths in the spanner with edge lengths d_w.
std::vector<std::vector<double>> spanner_distances(const std::vector<WeightedSite1D>& s, const Spanner1D& g);
// Largest d_G / d_w over distinct pairs with d_w > 0.
double max_ratio_1d(const std::vector<WeightedSite1D>& s, const Spanner1D& g);

}  // namespace gspan
