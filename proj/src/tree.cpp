#include "smallsol/tree.hpp"

#include "smallsol/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace smallsol {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<int> prufer_of(int n, const std::vector<Tree::Edge>& edges) {
    std::vector<std::set<int>> adj(n + 1);
    for (auto [a, b] : edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (adj[v].size() == 1) leaves.insert(v);
    std::vector<int> code;
    for (int step = 0; step < n - 2; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        int nb = *adj[leaf].begin();
        code.push_back(nb);
        adj[nb].erase(leaf);
        adj[leaf].clear();
        if (adj[nb].size() == 1) leaves.insert(nb);
    }
    return code;
}

}  // namespace

Tree Tree::from_prufer(int n, const std::vector<int>& code) {
    if (n < 2) throw Error("a tree needs at least two vertices");
    if (static_cast<int>(code.size()) != n - 2) throw Error("Prüfer code must have length n-2");
    std::vector<int> degree(n + 1, 1);
    for (int v : code) {
        if (v < 1 || v > n) throw Error("Prüfer code entry out of range");
        ++degree[v];
    }
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.emplace_back(a, b);
    return from_edges(n, std::move(edges));
}

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
    if (n < 2) throw Error("a tree needs at least two vertices");
    if (static_cast<int>(edges.size()) != n - 1) throw Error("a tree on n vertices has n-1 edges");
    UnionFind uf(n);
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b) throw Error("invalid tree edge");
        if (!uf.unite(a, b)) throw Error("edge list contains a cycle");
    }
    std::sort(edges.begin(), edges.end());
    Tree t;
    t.n_ = n;
    t.edges_ = std::move(edges);
    t.prufer_ = prufer_of(n, t.edges_);
    return t;
}

std::vector<int> Tree::degrees() const {
    std::vector<int> d(n_ + 1, 0);
    for (auto [a, b] : edges_) {
        ++d[a];
        ++d[b];
    }
    return d;
}

std::string Tree::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        os << (i ? " " : "") << edges_[i].first << "-" << edges_[i].second;
    return os.str();
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 2 || n > 8) throw Error("enumerate_trees: n must lie in 2..8");
    std::vector<Tree> out;
    std::vector<int> code(n - 2, 1);
    while (true) {
        out.push_back(Tree::from_prufer(n, code));
        int k = n - 3;
        while (k >= 0 && code[k] == n) code[k--] = 1;
        if (k < 0) break;
        ++code[k];
    }
    return out;
}

std::vector<int> multiple_vertices(const Tree& tree) {
    std::vector<int> out;
    auto d = tree.degrees();
    for (int v = 1; v <= tree.n(); ++v)
        if (d[v] >= 2) out.push_back(v);
    return out;
}

bool induced_connected(const Tree& tree, const std::vector<int>& vertices) {
    if (vertices.empty()) return true;
    std::set<int> in(vertices.begin(), vertices.end());
    UnionFind uf(tree.n());
    for (auto [a, b] : tree.edges())
        if (in.count(a) && in.count(b)) uf.unite(a, b);
    int root = uf.find(vertices.front());
    return std::all_of(vertices.begin(), vertices.end(), [&](int v) { return uf.find(v) == root; });
}

void TreeChain::validate(int n) const {
    if (static_cast<int>(chain.size()) != n - 1) throw Error("tree chain must have one tree per level n..2");
    for (int i = 0; i < static_cast<int>(chain.size()); ++i)
        if (chain[i].n() != n - i) throw Error("tree chain sizes must descend by one");
}

std::string TreeChain::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        os << (i ? "," : "");
        const auto& code = chain[i].prufer();
        if (code.empty()) os << "-";
        for (std::size_t j = 0; j < code.size(); ++j) os << (j ? "." : "") << code[j];
    }
    return os.str();
}

std::vector<TreeChain> enumerate_chains(int n) {
    if (n < 2) return {TreeChain{}};
    std::vector<std::vector<Tree>> levels;
    for (int k = n; k >= 2; --k) levels.push_back(enumerate_trees(k));
    std::vector<TreeChain> out;
    std::vector<std::size_t> idx(levels.size(), 0);
    while (true) {
        TreeChain c;
        for (std::size_t i = 0; i < levels.size(); ++i) c.chain.push_back(levels[i][idx[i]]);
        out.push_back(std::move(c));
        int k = static_cast<int>(levels.size()) - 1;
        while (k >= 0 && idx[k] + 1 == levels[k].size()) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
    }
    return out;
}

TreeChain first_chain(int n) {
    TreeChain c;
    for (int k = n; k >= 2; --k) c.chain.push_back(Tree::from_prufer(k, std::vector<int>(k - 2, 1)));
    return c;
}

}  // namespace smallsol
