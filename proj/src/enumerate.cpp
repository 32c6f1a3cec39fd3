#include "phylocount/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "phylocount/canonical.hpp"

namespace phylocount {

BudgetExceeded::BudgetExceeded(int level, std::size_t produced, std::size_t budget)
    : std::runtime_error("enumeration budget of " + std::to_string(budget) + " networks exceeded at level " +
                         std::to_string(level) + " (" + std::to_string(produced) + " produced so far)"),
      level_(level),
      produced_(produced) {}

std::vector<Dag> enumerate_trees(int l) {
    if (l < 1 || l > 8) throw std::invalid_argument("enumerate_trees: l must be in 1..8");
    Dag one;
    one.add_vertex();
    one.label[0] = 1;
    std::vector<Dag> cur{one};
    for (int lab = 2; lab <= l; ++lab) {
        std::vector<Dag> next;
        for (const Dag& t : cur) {
            // above the root
            {
                Dag d = t;
                int old = d.root();
                int x = d.add_vertex(), y = d.add_vertex();
                d.label[y] = lab;
                d.add_edge(x, old);
                d.add_edge(x, y);
                next.push_back(std::move(d));
            }
            for (auto [p, c] : t.edges()) {
                Dag d = t;
                int x = d.add_vertex(), y = d.add_vertex();
                d.label[y] = lab;
                d.replace_child(p, c, x);
                d.replace_parent(c, p, x);
                d.par[x][0] = p;
                d.ch[x] = {c, y};
                d.par[y][0] = x;
                next.push_back(std::move(d));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

// u subdivides (a,b), w subdivides (c,d), new edge u->w
Dag insert_pair(const Dag& net, std::pair<int, int> e1, std::pair<int, int> e2) {
    Dag d = net;
    auto [a, b] = e1;
    int u = d.add_vertex(), w = d.add_vertex();
    d.replace_child(a, b, u);
    d.replace_parent(b, a, u);
    d.par[u][0] = a;
    d.ch[u] = {b, w};
    auto [c, x] = e2;
    d.replace_child(c, x, w);
    d.replace_parent(x, c, w);
    d.par[w] = {c, u};
    d.ch[w][0] = x;
    return d;
}

// Calls f for every acyclic insertion; with prune_tc only tree-child results
// (the input must itself be tree-child then).
void for_each_insertion(const Dag& net, bool prune_tc, const std::function<void(Dag&&)>& f) {
    auto edges = net.edges();
    auto desc = descendant_sets(net);
    for (const auto& e1 : edges) {
        auto [a, b] = e1;
        if (prune_tc && net.is_ret(b)) continue;
        for (const auto& e2 : edges) {
            if (e1 == e2) continue;
            auto [c, d] = e2;
            if (test_bit(desc[d], a)) continue;  // w would reach u
            if (prune_tc) {
                if (net.is_ret(d) || net.is_ret(c)) continue;
                if (c != a) {
                    int other = net.ch[c][0] == d ? net.ch[c][1] : net.ch[c][0];
                    if (net.is_ret(other)) continue;
                }
            }
            f(insert_pair(net, e1, e2));
        }
    }
}

}  // namespace

std::vector<Dag> add_reticulation(const Dag& net) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Dag>> out;
    for_each_insertion(net, false, [&](Dag&& d) {
        std::string key = canonical_key(d, true);
        if (seen.insert(key).second) out.emplace_back(std::move(key), std::move(d));
    });
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Dag> r;
    for (auto& [k, d] : out) r.push_back(std::move(d));
    return r;
}

EnumerationResult enumerate_networks(NetworkClass cls, int k, int l, const EnumerateOptions& opt) {
    if (k < 0 || k > 3) throw std::invalid_argument("enumerate_networks: k must be in 0..3");
    EnumerationResult res;
    res.cls = cls;
    res.k = k;
    res.l = l;
    std::vector<Dag> cur = enumerate_trees(l);
    if (cur.size() > opt.budget) throw BudgetExceeded(0, cur.size(), opt.budget);
    for (int level = 1; level <= k; ++level) {
        std::unordered_set<std::string> seen;
        std::vector<Dag> next;
        for (const Dag& net : cur) {
            for_each_insertion(net, true, [&](Dag&& d) {
                if (seen.insert(canonical_key(d, true)).second) {
                    next.push_back(std::move(d));
                    if (next.size() > opt.budget) throw BudgetExceeded(level, next.size(), opt.budget);
                }
            });
        }
        cur = std::move(next);
    }
    std::vector<std::pair<std::string, Dag*>> kept;
    for (Dag& d : cur)
        if (in_class(cls, d)) kept.emplace_back(canonical_key(d, true), &d);
    std::sort(kept.begin(), kept.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    res.count = static_cast<unsigned long>(kept.size());
    for (auto& [key, d] : kept) {
        if (opt.shapes) {
            auto& e = res.shapes[canonical_key(*d, false)];
            if (e.labelings++ == 0) e.representative = *d;
        }
        if (opt.keep_networks) res.networks.push_back(*d);
        if (opt.keep_codes) res.codes.push_back(std::move(key));
    }
    return res;
}

ExactInt exhaustive_dag_search(NetworkClass cls, int k, int l) {
    if (k < 0 || l < 1) throw std::invalid_argument("exhaustive_dag_search: bad (k, l)");
    int n = 2 * l + 2 * k - 1;
    if (n > 9) throw std::invalid_argument("exhaustive_dag_search: n = " + std::to_string(n) + " exceeds 9");
    if (l == 1 && k == 0) return 1;
    int trees = l + k - 2;
    if (trees < 0) return 0;
    int internal = 1 + trees + k;

    std::set<std::string> shapes;
    std::vector<Dag> shape_reps;
    Dag d;
    for (int i = 0; i < internal; ++i) d.add_vertex();
    std::vector<int> cap(internal, 0);
    cap[0] = 2;

    std::function<void(int, int, int)> place = [&](int i, int tleft, int rleft) {
        if (i == internal) {
            Dag full = d;
            for (int v = 0; v < internal; ++v)
                for (int s = full.outdeg(v); s < (full.is_ret(v) ? 1 : 2); ++s) {
                    int leaf = full.add_vertex();
                    full.add_edge(v, leaf);
                }
            if (full.leaf_count() != l || !in_class(cls, full)) return;
            std::string key = canonical_key(full, false);
            if (shapes.insert(key).second) shape_reps.push_back(std::move(full));
            return;
        }
        if (tleft > 0) {
            for (int p = 0; p < i; ++p) {
                if (cap[p] == 0) continue;
                d.add_edge(p, i);
                --cap[p];
                cap[i] = 2;
                place(i + 1, tleft - 1, rleft);
                cap[i] = 0;
                ++cap[p];
                d.remove_edge(p, i);
            }
        }
        if (rleft > 0) {
            for (int p = 0; p < i; ++p) {
                if (cap[p] == 0) continue;
                for (int q = p + 1; q < i; ++q) {
                    if (cap[q] == 0) continue;
                    d.add_edge(p, i);
                    d.add_edge(q, i);
                    --cap[p];
                    --cap[q];
                    cap[i] = 1;
                    place(i + 1, tleft, rleft - 1);
                    cap[i] = 0;
                    ++cap[p];
                    ++cap[q];
                    d.remove_edge(q, i);
                    d.remove_edge(p, i);
                }
            }
        }
    };
    place(1, trees, k);

    ExactInt total = 0;
    for (Dag& s : shape_reps) {
        std::vector<int> leaves;
        for (int v = 0; v < s.size(); ++v)
            if (s.is_leaf(v)) leaves.push_back(v);
        std::vector<int> perm(l);
        std::iota(perm.begin(), perm.end(), 1);
        std::set<std::string> labeled;
        do {
            for (int i = 0; i < l; ++i) s.label[leaves[i]] = perm[i];
            labeled.insert(canonical_key(s, true));
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += static_cast<unsigned long>(labeled.size());
    }
    return total;
}

}  // namespace phylocount
