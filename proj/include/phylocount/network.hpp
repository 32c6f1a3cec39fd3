#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phylocount {

enum class VertexKind { Root, Leaf, TreeVertex, Reticulation };
enum class NetworkClass { TreeChild, Normal };

const char* to_string(VertexKind k);
const char* to_string(NetworkClass c);
// accepts "tree-child"/"tc"/"T" and "normal"/"N"
NetworkClass parse_class(std::string_view s);

class NetworkError : public std::runtime_error {
public:
    enum class Kind { Syntax, Range, Degree, Cycle, ParallelEdge, Disconnected, Label };
    NetworkError(Kind kind, const std::string& msg, int line = 0);
    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

const char* to_string(NetworkError::Kind k);

// Compact adjacency; every vertex has at most two children and two parents.
struct Dag {
    static constexpr int none = -1;
    std::vector<std::array<int, 2>> ch;
    std::vector<std::array<int, 2>> par;
    std::vector<int> label;  // leaf label rank (1..l) or 0

    int size() const { return static_cast<int>(ch.size()); }
    int outdeg(int v) const { return (ch[v][0] != none) + (ch[v][1] != none); }
    int indeg(int v) const { return (par[v][0] != none) + (par[v][1] != none); }
    bool is_leaf(int v) const { return ch[v][0] == none; }
    bool is_ret(int v) const { return par[v][1] != none; }
    VertexKind kind(int v) const;

    int add_vertex();
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void replace_child(int u, int old_child, int new_child);
    void replace_parent(int v, int old_parent, int new_parent);

    int root() const;
    int leaf_count() const;
    int reticulation_count() const;
    std::vector<std::pair<int, int>> edges() const;
    // vertices ordered so that parents precede children; empty if cyclic
    std::vector<int> topo_order() const;
};

class PhyloNetwork {
public:
    PhyloNetwork() = default;

    // Validates everything; throws NetworkError.
    static PhyloNetwork from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                   const std::map<int, std::string>& labels = {},
                                   std::string name = "N");
    // Labels taken from dag.label (rank r becomes the string "r"), 0 means unlabeled.
    static PhyloNetwork from_dag(const Dag& dag, std::string name = "N");

    const Dag& dag() const { return dag_; }
    const std::string& name() const { return name_; }
    int size() const { return dag_.size(); }
    int leaf_count() const { return dag_.leaf_count(); }
    int reticulation_count() const { return dag_.reticulation_count(); }
    int root() const { return dag_.root(); }
    VertexKind kind(int v) const { return dag_.kind(v); }
    std::vector<std::pair<int, int>> edges() const { return dag_.edges(); }

    bool labeled() const { return labeled_; }
    // empty string for internal vertices or unlabeled shapes
    const std::string& label(int v) const { return labels_[v]; }
    std::map<int, std::string> label_map() const;

    PhyloNetwork without_labels() const;
    PhyloNetwork with_labels(const std::map<int, std::string>& labels) const;

    bool operator==(const PhyloNetwork& o) const;

private:
    Dag dag_;
    std::vector<std::string> labels_;
    bool labeled_ = false;
    std::string name_ = "N";
};

struct PredicateResult {
    bool ok = true;
    std::vector<std::string> violations;
    explicit operator bool() const { return ok; }
};

PredicateResult is_tree_child(const PhyloNetwork& net);
PredicateResult is_normal(const PhyloNetwork& net);
bool is_tree_child(const Dag& d);
// shortcut-freeness plus tree-child
bool is_normal(const Dag& d);
bool in_class(NetworkClass c, const Dag& d);

// Descendant sets (reflexive) as bit rows, indexed by vertex.
std::vector<std::vector<std::uint64_t>> descendant_sets(const Dag& d);
inline bool test_bit(const std::vector<std::uint64_t>& row, int v) {
    return (row[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
}

PhyloNetwork parse_network(std::string_view text);
// Several documents, each closed by "end".
std::vector<PhyloNetwork> parse_network_stream(std::string_view text);
std::string serialize_network(const PhyloNetwork& net);

}  // namespace phylocount
