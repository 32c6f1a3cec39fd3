#include "phylocount/network.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace phylocount {

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::Root: return "root";
        case VertexKind::Leaf: return "leaf";
        case VertexKind::TreeVertex: return "tree";
        case VertexKind::Reticulation: return "reticulation";
    }
    return "?";
}

const char* to_string(NetworkClass c) {
    return c == NetworkClass::TreeChild ? "tree-child" : "normal";
}

NetworkClass parse_class(std::string_view s) {
    if (s == "tree-child" || s == "treechild" || s == "tc" || s == "T") return NetworkClass::TreeChild;
    if (s == "normal" || s == "N") return NetworkClass::Normal;
    throw std::invalid_argument("unknown network class: " + std::string(s));
}

NetworkError::NetworkError(Kind kind, const std::string& msg, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      kind_(kind),
      line_(line) {}

const char* to_string(NetworkError::Kind k) {
    using K = NetworkError::Kind;
    switch (k) {
        case K::Syntax: return "syntax";
        case K::Range: return "range";
        case K::Degree: return "degree";
        case K::Cycle: return "cycle";
        case K::ParallelEdge: return "parallel-edge";
        case K::Disconnected: return "disconnected";
        case K::Label: return "label";
    }
    return "?";
}

// ---- Dag

VertexKind Dag::kind(int v) const {
    int in = indeg(v), out = outdeg(v);
    if (out == 0) return VertexKind::Leaf;
    if (in == 0) return VertexKind::Root;
    if (in == 2) return VertexKind::Reticulation;
    return VertexKind::TreeVertex;
}

int Dag::add_vertex() {
    ch.push_back({none, none});
    par.push_back({none, none});
    label.push_back(0);
    return size() - 1;
}

void Dag::add_edge(int u, int v) {
    auto& c = ch[u];
    if (c[0] == none) c[0] = v; else c[1] = v;
    auto& p = par[v];
    if (p[0] == none) p[0] = u; else p[1] = u;
}

namespace {
void drop(std::array<int, 2>& a, int x) {
    if (a[0] == x) {
        a[0] = a[1];
        a[1] = Dag::none;
    } else if (a[1] == x) {
        a[1] = Dag::none;
    }
}
}  // namespace

void Dag::remove_edge(int u, int v) {
    drop(ch[u], v);
    drop(par[v], u);
}

void Dag::replace_child(int u, int old_child, int new_child) {
    auto& c = ch[u];
    if (c[0] == old_child) c[0] = new_child; else c[1] = new_child;
}

void Dag::replace_parent(int v, int old_parent, int new_parent) {
    auto& p = par[v];
    if (p[0] == old_parent) p[0] = new_parent; else p[1] = new_parent;
}

int Dag::root() const {
    for (int v = 0; v < size(); ++v)
        if (par[v][0] == none) return v;
    return none;
}

int Dag::leaf_count() const {
    int c = 0;
    for (int v = 0; v < size(); ++v) c += is_leaf(v);
    return c;
}

int Dag::reticulation_count() const {
    int c = 0;
    for (int v = 0; v < size(); ++v) c += is_ret(v);
    return c;
}

std::vector<std::pair<int, int>> Dag::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < size(); ++u)
        for (int c : ch[u])
            if (c != none) e.emplace_back(u, c);
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<int> Dag::topo_order() const {
    int n = size();
    std::vector<int> in(n), order;
    order.reserve(n);
    for (int v = 0; v < n; ++v) {
        in[v] = indeg(v);
        if (in[v] == 0) order.push_back(v);
    }
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : ch[order[i]])
            if (c != none && --in[c] == 0) order.push_back(c);
    if (static_cast<int>(order.size()) != n) order.clear();
    return order;
}

std::vector<std::vector<std::uint64_t>> descendant_sets(const Dag& d) {
    int n = d.size();
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> desc(n, std::vector<std::uint64_t>(words, 0));
    auto order = d.topo_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        desc[v][v >> 6] |= std::uint64_t{1} << (v & 63);
        for (int c : d.ch[v])
            if (c != Dag::none)
                for (size_t w = 0; w < words; ++w) desc[v][w] |= desc[c][w];
    }
    return desc;
}

// ---- predicates

namespace {

void tree_child_violations(const Dag& d, std::vector<std::string>* out, bool& ok) {
    for (int v = 0; v < d.size(); ++v) {
        if (d.is_leaf(v)) continue;
        if (d.is_ret(v)) {
            if (d.is_ret(d.ch[v][0])) {
                ok = false;
                if (!out) return;
                out->push_back("reticulation " + std::to_string(v) + " has reticulation child " +
                               std::to_string(d.ch[v][0]));
            }
        } else if (d.is_ret(d.ch[v][0]) && d.is_ret(d.ch[v][1])) {
            ok = false;
            if (!out) return;
            out->push_back("vertex " + std::to_string(v) + " has only reticulation children");
        }
    }
}

void shortcut_violations(const Dag& d, std::vector<std::string>* out, bool& ok) {
    auto desc = descendant_sets(d);
    for (int u = 0; u < d.size(); ++u) {
        if (d.outdeg(u) != 2) continue;
        for (int i = 0; i < 2; ++i) {
            int v = d.ch[u][i], other = d.ch[u][1 - i];
            if (test_bit(desc[other], v)) {
                ok = false;
                if (!out) return;
                out->push_back("shortcut edge " + std::to_string(u) + "->" + std::to_string(v));
            }
        }
    }
}

}  // namespace

bool is_tree_child(const Dag& d) {
    bool ok = true;
    tree_child_violations(d, nullptr, ok);
    return ok;
}

bool is_normal(const Dag& d) {
    bool ok = is_tree_child(d);
    if (ok) shortcut_violations(d, nullptr, ok);
    return ok;
}

bool in_class(NetworkClass c, const Dag& d) {
    return c == NetworkClass::TreeChild ? is_tree_child(d) : is_normal(d);
}

PredicateResult is_tree_child(const PhyloNetwork& net) {
    PredicateResult r;
    tree_child_violations(net.dag(), &r.violations, r.ok);
    return r;
}

PredicateResult is_normal(const PhyloNetwork& net) {
    PredicateResult r = is_tree_child(net);
    for (auto& v : r.violations) v = "not tree-child: " + v;
    shortcut_violations(net.dag(), &r.violations, r.ok);
    return r;
}

// ---- PhyloNetwork

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// label strings -> ranks; integer labels keep their value
void assign_ranks(Dag& d, const std::vector<std::string>& labels) {
    std::vector<int> leaves;
    for (int v = 0; v < d.size(); ++v)
        if (!labels[v].empty()) leaves.push_back(v);
    bool numeric = std::all_of(leaves.begin(), leaves.end(), [&](int v) { return all_digits(labels[v]); });
    if (numeric) {
        for (int v : leaves) d.label[v] = std::stoi(labels[v]);
        return;
    }
    std::sort(leaves.begin(), leaves.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    for (size_t i = 0; i < leaves.size(); ++i) d.label[leaves[i]] = static_cast<int>(i) + 1;
}

void validate_structure(const Dag& d) {
    int n = d.size();
    if (n == 1) return;
    int roots = 0;
    for (int v = 0; v < n; ++v) {
        int in = d.indeg(v), out = d.outdeg(v);
        bool fine = (in == 0 && out == 2) || (in == 1 && out == 0) || (in == 1 && out == 2) ||
                    (in == 2 && out == 1);
        if (!fine)
            throw NetworkError(NetworkError::Kind::Degree,
                               "vertex " + std::to_string(v) + " has indegree " + std::to_string(in) +
                                   " and outdegree " + std::to_string(out));
        roots += in == 0;
    }
    if (roots != 1)
        throw NetworkError(roots == 0 ? NetworkError::Kind::Cycle : NetworkError::Kind::Disconnected,
                           roots == 0 ? "no indegree-0 vertex" : "more than one indegree-0 vertex");
    if (d.topo_order().empty()) throw NetworkError(NetworkError::Kind::Cycle, "directed cycle");
    // weak connectivity
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto* a : {&d.ch[v], &d.par[v]})
            for (int w : *a)
                if (w != Dag::none && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
    }
    if (count != n) throw NetworkError(NetworkError::Kind::Disconnected, "graph is not connected");
}

}  // namespace

PhyloNetwork PhyloNetwork::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                      const std::map<int, std::string>& labels, std::string name) {
    if (n < 1) throw NetworkError(NetworkError::Kind::Range, "vertex count must be positive");
    PhyloNetwork net;
    net.name_ = std::move(name);
    Dag& d = net.dag_;
    for (int i = 0; i < n; ++i) d.add_vertex();
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw NetworkError(NetworkError::Kind::Range,
                               "edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        if (u == v) throw NetworkError(NetworkError::Kind::Cycle, "self-loop at " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw NetworkError(NetworkError::Kind::ParallelEdge,
                               "parallel edge " + std::to_string(u) + "->" + std::to_string(v));
        if (d.outdeg(u) == 2 || d.indeg(v) == 2)
            throw NetworkError(NetworkError::Kind::Degree,
                               "degree bound exceeded at edge " + std::to_string(u) + "->" + std::to_string(v));
        d.add_edge(u, v);
    }
    validate_structure(d);

    net.labels_.assign(n, "");
    if (!labels.empty()) {
        std::set<std::string> used;
        for (const auto& [v, lab] : labels) {
            if (v < 0 || v >= n) throw NetworkError(NetworkError::Kind::Range, "leaf id out of range");
            if (!d.is_leaf(v))
                throw NetworkError(NetworkError::Kind::Label, "label on non-leaf vertex " + std::to_string(v));
            if (lab.empty()) throw NetworkError(NetworkError::Kind::Label, "empty label");
            if (!used.insert(lab).second) throw NetworkError(NetworkError::Kind::Label, "duplicate label " + lab);
            net.labels_[v] = lab;
        }
        int leaves = d.leaf_count();
        if (static_cast<int>(labels.size()) != leaves)
            throw NetworkError(NetworkError::Kind::Label, "labels must be given for all leaves or none");
        if (std::all_of(used.begin(), used.end(), all_digits)) {
            std::set<int> vals;
            for (const auto& s : used) vals.insert(std::stoi(s));
            if (*vals.begin() != 1 || *vals.rbegin() != leaves)
                throw NetworkError(NetworkError::Kind::Label, "non-contiguous integer labels (must be 1.." +
                                                                  std::to_string(leaves) + ")");
        }
        net.labeled_ = true;
        assign_ranks(d, net.labels_);
    }
    return net;
}

PhyloNetwork PhyloNetwork::from_dag(const Dag& dag, std::string name) {
    std::map<int, std::string> labels;
    for (int v = 0; v < dag.size(); ++v)
        if (dag.label[v] > 0) labels[v] = std::to_string(dag.label[v]);
    return from_edges(dag.size(), dag.edges(), labels, std::move(name));
}

std::map<int, std::string> PhyloNetwork::label_map() const {
    std::map<int, std::string> m;
    if (labeled_)
        for (int v = 0; v < size(); ++v)
            if (!labels_[v].empty()) m[v] = labels_[v];
    return m;
}

PhyloNetwork PhyloNetwork::without_labels() const {
    PhyloNetwork r = *this;
    r.labels_.assign(size(), "");
    std::fill(r.dag_.label.begin(), r.dag_.label.end(), 0);
    r.labeled_ = false;
    return r;
}

PhyloNetwork PhyloNetwork::with_labels(const std::map<int, std::string>& labels) const {
    return from_edges(size(), edges(), labels, name_);
}

bool PhyloNetwork::operator==(const PhyloNetwork& o) const {
    return name_ == o.name_ && size() == o.size() && edges() == o.edges() && labeled_ == o.labeled_ &&
           labels_ == o.labels_;
}

// ---- PNET text format

namespace {

std::vector<std::string> tokens(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

int to_int(const std::string& s, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw NetworkError(NetworkError::Kind::Syntax, "expected integer, got '" + s + "'", line);
    return v;
}

struct Doc {
    std::string name;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;
    int start_line = 0;
};

std::vector<PhyloNetwork> parse_docs(std::string_view text, bool single) {
    std::vector<PhyloNetwork> out;
    std::optional<Doc> doc;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto t = tokens(line);
        if (t.empty()) continue;
        const std::string& kw = t[0];
        auto want = [&](size_t k) {
            if (t.size() != k)
                throw NetworkError(NetworkError::Kind::Syntax,
                                   "'" + kw + "' expects " + std::to_string(k - 1) + " argument(s)", lineno);
        };
        if (kw == "network") {
            if (doc) throw NetworkError(NetworkError::Kind::Syntax, "missing 'end' before new network", lineno);
            want(2);
            doc = Doc{t[1], -1, {}, {}, lineno};
            continue;
        }
        if (!doc) throw NetworkError(NetworkError::Kind::Syntax, "expected 'network <name>'", lineno);
        if (kw == "vertices") {
            want(2);
            if (doc->n >= 0) throw NetworkError(NetworkError::Kind::Syntax, "duplicate 'vertices'", lineno);
            doc->n = to_int(t[1], lineno);
            if (doc->n < 1) throw NetworkError(NetworkError::Kind::Syntax, "vertex count must be positive", lineno);
        } else if (kw == "edge") {
            want(3);
            if (doc->n < 0) throw NetworkError(NetworkError::Kind::Syntax, "'edge' before 'vertices'", lineno);
            int u = to_int(t[1], lineno), v = to_int(t[2], lineno);
            if (u < 0 || u >= doc->n || v < 0 || v >= doc->n)
                throw NetworkError(NetworkError::Kind::Syntax, "vertex id out of range", lineno);
            doc->edges.emplace_back(u, v);
        } else if (kw == "leaf") {
            want(3);
            if (doc->n < 0) throw NetworkError(NetworkError::Kind::Syntax, "'leaf' before 'vertices'", lineno);
            int v = to_int(t[1], lineno);
            if (v < 0 || v >= doc->n) throw NetworkError(NetworkError::Kind::Syntax, "vertex id out of range", lineno);
            if (!doc->labels.emplace(v, t[2]).second)
                throw NetworkError(NetworkError::Kind::Label, "leaf " + t[1] + " declared twice", lineno);
        } else if (kw == "end") {
            want(1);
            if (doc->n < 0) throw NetworkError(NetworkError::Kind::Syntax, "missing 'vertices'", lineno);
            out.push_back(PhyloNetwork::from_edges(doc->n, doc->edges, doc->labels, doc->name));
            doc.reset();
            if (single) {
                // only blank/comment lines may follow
                while (pos <= text.size()) {
                    size_t nl2 = text.find('\n', pos);
                    auto rest = text.substr(pos, nl2 == std::string_view::npos ? std::string_view::npos : nl2 - pos);
                    pos = nl2 == std::string_view::npos ? text.size() + 1 : nl2 + 1;
                    ++lineno;
                    if (!tokens(rest).empty())
                        throw NetworkError(NetworkError::Kind::Syntax, "content after 'end'", lineno);
                }
            }
        } else {
            throw NetworkError(NetworkError::Kind::Syntax, "unknown keyword '" + kw + "'", lineno);
        }
    }
    if (doc) throw NetworkError(NetworkError::Kind::Syntax, "missing 'end'", lineno);
    return out;
}

}  // namespace

PhyloNetwork parse_network(std::string_view text) {
    auto docs = parse_docs(text, true);
    if (docs.empty()) throw NetworkError(NetworkError::Kind::Syntax, "empty input", 1);
    return docs.front();
}

std::vector<PhyloNetwork> parse_network_stream(std::string_view text) { return parse_docs(text, false); }

std::string serialize_network(const PhyloNetwork& net) {
    std::string s = "network " + net.name() + "\nvertices " + std::to_string(net.size()) + "\n";
    for (auto [u, v] : net.edges()) s += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    if (net.labeled())
        for (int v = 0; v < net.size(); ++v)
            if (!net.label(v).empty()) s += "leaf " + std::to_string(v) + " " + net.label(v) + "\n";
    s += "end\n";
    return s;
}

}  // namespace phylocount
