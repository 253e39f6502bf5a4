#pragma once

#include <string>
#include <utility>
#include <vector>

namespace smallsol {

/// Labeled tree on vertices 1..n with its Prüfer code.
class Tree {
public:
    using Edge = std::pair<int, int>;

    /// Decodes a Prüfer code of length n-2 with entries in 1..n.
    static Tree from_prufer(int n, const std::vector<int>& code);
    /// Builds from an edge list; throws unless it is a spanning tree.
    static Tree from_edges(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    /// Edges (a, b) with a < b, sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& prufer() const { return prufer_; }
    std::vector<int> degrees() const;

    std::string str() const;
    friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> prufer_;
};

/// Every labeled tree on n vertices (2 <= n <= 8), in lexicographic order of
/// Prüfer codes. The first one is the star centred at vertex 1.
std::vector<Tree> enumerate_trees(int n);

/// Vertices of degree at least two.
std::vector<int> multiple_vertices(const Tree& tree);

/// The subgraph induced on `vertices` is connected (true for the empty set).
bool induced_connected(const Tree& tree, const std::vector<int>& vertices);

/// One tree per elimination level: chain[0] has n vertices, the last has 2.
struct TreeChain {
    std::vector<Tree> chain;

    /// Checks that sizes descend by one down to 2.
    void validate(int n) const;
    std::string str() const;
};

/// Every chain (D_n, ..., D_2) in lexicographic order of the per-level codes.
std::vector<TreeChain> enumerate_chains(int n);
TreeChain first_chain(int n);

}  // namespace smallsol
