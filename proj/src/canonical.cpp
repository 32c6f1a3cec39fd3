#include "phylocount/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace phylocount {

namespace {

int kind_code(const Dag& d, int v) {
    switch (d.kind(v)) {
        case VertexKind::Root: return 0;
        case VertexKind::TreeVertex: return 1;
        case VertexKind::Reticulation: return 2;
        case VertexKind::Leaf: return 3;
    }
    return 4;
}

using Sig = std::array<int, 5>;

// Rank vertices by key; returns number of classes.
int rank_by(const std::vector<Sig>& sig, std::vector<int>& col, std::vector<int>& idx) {
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int classes = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++classes;
        col[idx[i]] = classes;
    }
    return idx.empty() ? 0 : classes + 1;
}

class Canonizer {
public:
    Canonizer(const Dag& d, bool respect, bool collect) : d_(d), respect_(respect), collect_(collect) {
        n_ = d.size();
        wide_ = n_ >= 250;
        idx_.resize(n_);
        sig_.resize(n_);
    }

    CanonicalForm run() {
        std::vector<int> col(n_);
        std::iota(idx_.begin(), idx_.end(), 0);
        for (int v = 0; v < n_; ++v) sig_[v] = {kind_code(d_, v), respect_ ? d_.label[v] : 0, 0, 0, 0};
        int classes = rank_by(sig_, col, idx_);
        search(col, classes);
        CanonicalForm f;
        f.code = best_;
        f.order = best_order_;
        if (collect_) {
            std::set<std::vector<int>> seen;
            for (const auto& ord : equal_orders_) {
                std::vector<int> aut(n_);
                for (int p = 0; p < n_; ++p) aut[best_order_[p]] = ord[p];
                if (seen.insert(aut).second) f.automorphisms.push_back(std::move(aut));
            }
        }
        return f;
    }

private:
    int refine(std::vector<int>& col, int classes) {
        for (;;) {
            for (int v = 0; v < n_; ++v) {
                int c0 = d_.ch[v][0] == Dag::none ? -1 : col[d_.ch[v][0]];
                int c1 = d_.ch[v][1] == Dag::none ? -1 : col[d_.ch[v][1]];
                int p0 = d_.par[v][0] == Dag::none ? -1 : col[d_.par[v][0]];
                int p1 = d_.par[v][1] == Dag::none ? -1 : col[d_.par[v][1]];
                if (c0 > c1) std::swap(c0, c1);
                if (p0 > p1) std::swap(p0, p1);
                sig_[v] = {col[v], c0, c1, p0, p1};
            }
            int now = rank_by(sig_, col, idx_);
            if (now == classes) return now;
            classes = now;
        }
    }

    void put(std::string& s, int x) const {
        if (wide_) s.push_back(static_cast<char>((x >> 8) & 0xFF));
        s.push_back(static_cast<char>(x & 0xFF));
    }

    std::string encode(const std::vector<int>& order, const std::vector<int>& pos) const {
        const int leaf_mark = wide_ ? 0xFFFF : 0xFF;
        const int ret_mark = leaf_mark - 1;
        std::string s;
        s.reserve(2 + 2 * n_ * (wide_ ? 2 : 1));
        s.push_back(static_cast<char>((n_ >> 8) & 0xFF));
        s.push_back(static_cast<char>(n_ & 0xFF));
        for (int p = 0; p < n_; ++p) {
            int v = order[p];
            if (d_.is_leaf(v)) {
                put(s, leaf_mark);
                put(s, respect_ ? d_.label[v] : 0);
            } else if (d_.is_ret(v)) {
                put(s, pos[d_.ch[v][0]]);
                put(s, ret_mark);
            } else {
                int a = pos[d_.ch[v][0]], b = pos[d_.ch[v][1]];
                put(s, std::min(a, b));
                put(s, std::max(a, b));
            }
        }
        return s;
    }

    void search(std::vector<int>& col, int classes) {
        classes = refine(col, classes);
        if (classes == n_) {
            std::vector<int> order(n_);
            for (int v = 0; v < n_; ++v) order[col[v]] = v;
            std::string code = encode(order, col);
            if (best_order_.empty() || code < best_) {
                best_ = std::move(code);
                best_order_ = order;
                equal_orders_.clear();
                if (collect_) equal_orders_.push_back(std::move(order));
            } else if (collect_ && code == best_) {
                equal_orders_.push_back(std::move(order));
            }
            return;
        }
        // first non-singleton cell
        std::vector<int> size(classes, 0);
        for (int v = 0; v < n_; ++v) ++size[col[v]];
        int cell = 0;
        while (size[cell] < 2) ++cell;
        std::vector<int> members;
        for (int v = 0; v < n_; ++v)
            if (col[v] == cell) members.push_back(v);
        for (int v : members) {
            std::vector<int> next(n_);
            for (int w = 0; w < n_; ++w) next[w] = 2 * col[w];
            next[v] += 1;
            search(next, classes + 1);
        }
    }

    const Dag& d_;
    bool respect_, collect_;
    int n_ = 0;
    bool wide_ = false;
    std::vector<int> idx_;
    std::vector<Sig> sig_;
    std::string best_;
    std::vector<int> best_order_;
    std::vector<std::vector<int>> equal_orders_;
};

}  // namespace

CanonicalForm canonical_form(const Dag& d, bool respect_labels, bool collect_automorphisms) {
    return Canonizer(d, respect_labels, collect_automorphisms).run();
}

std::string canonical_key(const Dag& d, bool respect_labels) {
    return Canonizer(d, respect_labels, false).run().code;
}

CanonicalCode canonical_code(const PhyloNetwork& net, bool respect_labels) {
    if (respect_labels && !net.labeled() && net.size() > 1)
        throw std::invalid_argument("label-respecting code needs a labeled network");
    CanonicalCode c{canonical_key(net.dag(), respect_labels)};
    if (respect_labels && net.labeled()) {
        // label strings in rank order pin the rank -> string correspondence
        std::vector<std::pair<int, std::string>> labs;
        for (int v = 0; v < net.size(); ++v)
            if (!net.label(v).empty()) labs.emplace_back(net.dag().label[v], net.label(v));
        std::sort(labs.begin(), labs.end());
        c.bytes.push_back('\0');
        for (const auto& [r, s] : labs) {
            c.bytes += s;
            c.bytes.push_back('\x1f');
        }
    }
    return c;
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (unsigned char b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

namespace {

struct IsoSearch {
    const Dag& a;
    const Dag& b;
    bool respect;
    std::vector<int> order, f, used;

    bool compatible(int v, int w) const {
        if (a.kind(v) != b.kind(w)) return false;
        if (respect && a.label[v] != b.label[w]) return false;
        // parents of v are already mapped (topological order)
        std::array<int, 2> pa{}, pb{};
        for (int i = 0; i < 2; ++i) {
            pa[i] = a.par[v][i] == Dag::none ? -1 : f[a.par[v][i]];
            pb[i] = b.par[w][i];
        }
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        return pa == pb;
    }

    bool go(size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int w = 0; w < b.size(); ++w) {
            if (used[w] || !compatible(v, w)) continue;
            f[v] = w;
            used[w] = 1;
            if (go(i + 1)) return true;
            used[w] = 0;
        }
        f[v] = -1;
        return false;
    }
};

}  // namespace

std::vector<int> find_isomorphism(const Dag& a, const Dag& b, bool respect_labels) {
    if (a.size() != b.size() || a.edges().size() != b.edges().size()) return {};
    IsoSearch s{a, b, respect_labels, a.topo_order(), std::vector<int>(a.size(), -1),
                std::vector<int>(b.size(), 0)};
    if (s.order.empty() && a.size() > 0) return {};
    if (!s.go(0)) return {};
    return s.f;
}

}  // namespace phylocount
