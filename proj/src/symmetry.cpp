#include "phylocount/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"
#include "phylocount/canonical.hpp"

namespace phylocount {

namespace {

bool is_tree_vertex(const Dag& d, int v) { return d.indeg(v) == 1 && d.outdeg(v) == 2; }

// vertices every root path to which passes through one of the blocked vertices
std::vector<int> dominated(const Dag& d, const std::vector<int>& blocked) {
    std::vector<char> seen(d.size(), 0);
    for (int b : blocked) seen[b] = 2;
    std::vector<int> stack{d.root()};
    if (seen[d.root()]) stack.clear();
    else seen[d.root()] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int c : d.ch[u])
            if (c != Dag::none && !seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
    }
    std::vector<int> out;
    for (int u = 0; u < d.size(); ++u)
        if (seen[u] != 1) out.push_back(u);
    return out;
}

using Perm = std::vector<int>;  // on leaf positions

Perm on_leaves(const std::vector<int>& sigma, const std::vector<int>& leaves) {
    Perm p;
    for (int v : leaves) p.push_back(static_cast<int>(std::lower_bound(leaves.begin(), leaves.end(), sigma[v]) - leaves.begin()));
    return p;
}

std::set<Perm> generated(const std::vector<Perm>& gens, size_t n) {
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> group{id};
    std::vector<Perm> todo{id};
    while (!todo.empty()) {
        Perm p = todo.back();
        todo.pop_back();
        for (const auto& g : gens) {
            Perm q(n);
            for (size_t x = 0; x < n; ++x) q[x] = g[p[x]];
            if (group.insert(q).second) todo.push_back(q);
        }
    }
    return group;
}

int fixed_points(const std::vector<int>& sigma) {
    int c = 0;
    for (size_t i = 0; i < sigma.size(); ++i) c += sigma[i] == static_cast<int>(i);
    return c;
}

}  // namespace

std::vector<SymmetryItem> subnetwork_roots(const Dag& d, bool pairs) {
    const int n = d.size();
    std::vector<SymmetryItem> out;
    std::vector<std::vector<int>> single(n);
    for (int v = 0; v < n; ++v) {
        if (d.outdeg(v) != 2 || d.indeg(v) > 1) continue;
        single[v] = dominated(d, {v});
        if (!pairs) out.push_back({{v}, single[v], false, false, {}});
    }
    if (!pairs) return out;
    auto desc = descendant_sets(d);
    // candidate pairs with something dominated jointly but by neither alone
    struct Cand {
        SymmetryItem item;
        std::vector<int> joint;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < n; ++v) {
        if (!is_tree_vertex(d, v)) continue;
        for (int w = v + 1; w < n; ++w) {
            if (!is_tree_vertex(d, w) || test_bit(desc[v], w) || test_bit(desc[w], v)) continue;
            std::vector<int> mem = dominated(d, {v, w}), joint;
            for (int u : mem)
                if (!std::binary_search(single[v].begin(), single[v].end(), u) &&
                    !std::binary_search(single[w].begin(), single[w].end(), u))
                    joint.push_back(u);
            if (!joint.empty()) cands.push_back({{{v, w}, mem, false, false, {}}, joint});
        }
    }
    // keep the lowest pair for each jointly dominated part
    for (const auto& c : cands) {
        bool lowest = std::none_of(cands.begin(), cands.end(), [&](const Cand& o) {
            return o.joint == c.joint && o.item.members.size() < c.item.members.size();
        });
        if (lowest) out.push_back(c.item);
    }
    return out;
}

namespace {

std::vector<std::vector<int>> witnesses_from(const Dag& d, const SymmetryItem& item,
                                             const std::vector<std::vector<int>>& auts) {
    std::vector<char> interior(d.size(), 0);
    for (int u : item.members) interior[u] = 1;
    for (int r : item.roots) interior[r] = 0;
    std::vector<std::vector<int>> out;
    for (const auto& sigma : auts) {
        bool supported = true;
        for (int u = 0; u < d.size() && supported; ++u)
            if (!interior[u] && sigma[u] != u) supported = false;
        if (!supported) continue;
        if (item.roots.size() == 1) {
            const auto& c = d.ch[item.roots[0]];
            if (sigma[c[0]] != c[1]) continue;
        } else if (fixed_points(sigma) == d.size()) {
            continue;
        }
        out.push_back(sigma);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> symmetry_witnesses(const Dag& d, const SymmetryItem& item) {
    return witnesses_from(d, item, canonical_form(d, false, true).automorphisms);
}

SymmetryReport analyze_symmetry(const Dag& d) {
    SymmetryReport r;
    r.leaves = d.leaf_count();
    r.vertices = subnetwork_roots(d, false);
    r.pairs = subnetwork_roots(d, true);
    std::vector<SymmetryItem*> all;
    for (auto& it : r.vertices) all.push_back(&it);
    for (auto& it : r.pairs) all.push_back(&it);

    // smaller subnetworks first, so inner items are settled before outer ones
    std::stable_sort(all.begin(), all.end(), [](const SymmetryItem* a, const SymmetryItem* b) {
        return a->members.size() < b->members.size();
    });
    const auto auts = canonical_form(d, false, true).automorphisms;
    std::vector<int> leaves;
    for (int v = 0; v < d.size(); ++v)
        if (d.is_leaf(v)) leaves.push_back(v);
    std::vector<std::vector<std::vector<int>>> witnesses(all.size());
    for (size_t i = 0; i < all.size(); ++i) {
        witnesses[i] = witnesses_from(d, *all[i], auts);
        all[i]->symmetric = !witnesses[i].empty();
    }

    for (size_t i = 0; i < all.size(); ++i) {
        SymmetryItem& it = *all[i];
        if (!it.symmetric) continue;
        std::set<int> mem(it.members.begin(), it.members.end());
        // leaf permutations already produced by the items strictly inside
        std::vector<Perm> gens;
        for (size_t j = 0; j < i; ++j) {
            const SymmetryItem& o = *all[j];
            if (o.members.size() >= it.members.size()) continue;
            if (!std::all_of(o.members.begin(), o.members.end(), [&](int u) { return mem.count(u); })) continue;
            for (const auto& w : witnesses[j]) gens.push_back(on_leaves(w, leaves));
        }
        std::set<Perm> inner = generated(gens, leaves.size());
        const std::vector<int>* chosen = nullptr;
        for (const auto& sigma : witnesses[i])
            if (!inner.count(on_leaves(sigma, leaves))) {
                chosen = &sigma;
                break;
            }
        it.independent = chosen != nullptr;
        if (!chosen) {
            chosen = &witnesses[i].front();
            for (const auto& sigma : witnesses[i])
                if (fixed_points(sigma) > fixed_points(*chosen)) chosen = &sigma;
        }
        it.witness = *chosen;
        if (it.independent) ++r.f;
    }
    r.group_order = leaf_group_order(auts, d);
    r.labelings = factorial(r.leaves) / pow2(r.f);
    return r;
}

SymmetryReport analyze_symmetry(const PhyloNetwork& net) { return analyze_symmetry(net.dag()); }

ExactInt leaf_group_order(const Dag& d) { return leaf_group_order(canonical_form(d, false, true).automorphisms, d); }

ExactInt leaf_group_order(const std::vector<std::vector<int>>& auts, const Dag& d) {
    std::vector<int> leaves;
    for (int v = 0; v < d.size(); ++v)
        if (d.is_leaf(v)) leaves.push_back(v);
    std::set<std::vector<int>> images;
    for (const auto& aut : auts) {
        std::vector<int> img;
        for (int v : leaves) img.push_back(aut[v]);
        images.insert(std::move(img));
    }
    return ExactInt(static_cast<unsigned long>(images.size()));
}

ExactInt burnside_group_order(const Dag& d) {
    std::vector<int> leaves;
    for (int v = 0; v < d.size(); ++v)
        if (d.is_leaf(v)) leaves.push_back(v);
    if (leaves.size() > 8) throw std::invalid_argument("burnside_group_order: too many leaves");
    Dag lab = d;
    std::vector<int> perm(leaves.size());
    std::iota(perm.begin(), perm.end(), 1);
    for (size_t i = 0; i < leaves.size(); ++i) lab.label[leaves[i]] = perm[i];
    const std::string base = canonical_key(lab, true);
    unsigned long fixed = 0;
    do {
        for (size_t i = 0; i < leaves.size(); ++i) lab.label[leaves[i]] = perm[i];
        fixed += canonical_key(lab, true) == base;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return ExactInt(fixed);
}

ExactInt count_labelings(const Dag& d) {
    SymmetryReport r = analyze_symmetry(d);
    if (pow2(r.f) != r.group_order)
        throw SymmetryMismatch("2^f = " + pow2(r.f).get_str() + " but |F| = " + r.group_order.get_str());
    return r.labelings;
}

ExactInt count_labelings(const PhyloNetwork& net) {
    try {
        return count_labelings(net.dag());
    } catch (const SymmetryMismatch& e) {
        throw SymmetryMismatch(std::string(e.what()) + " for network\n" + serialize_network(net));
    }
}

DenominatorCheck denominator_check(const ExactInt& value, long l) {
    if (l < 1) throw std::invalid_argument("denominator_check: l must be positive");
    ExactRat q(value, factorial(l));
    q.canonicalize();
    DenominatorCheck c;
    c.numerator = q.get_num();
    c.denominator = q.get_den();
    ExactInt rest = c.denominator;
    std::string out;
    bool odd_prime = false;
    for (unsigned long p = 2; rest > 1; ++p) {
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (!e) continue;
        if (p != 2) odd_prime = true;
        if (!out.empty()) out += " * ";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    c.factored = out.empty() ? "1" : out;
    c.pass = !odd_prime;
    return c;
}

std::string report_json(const SymmetryReport& r, int indent) {
    using nlohmann::json;
    auto items = [](const std::vector<SymmetryItem>& v) {
        json a = json::array();
        for (const auto& it : v) {
            json moved = json::array();
            for (size_t u = 0; u < it.witness.size(); ++u)
                if (it.witness[u] != static_cast<int>(u)) moved.push_back({u, it.witness[u]});
            json o = {{"roots", it.roots}, {"symmetric", it.symmetric}, {"independent", it.independent}};
            if (it.symmetric) o["witness"] = moved;
            a.push_back(o);
        }
        return a;
    };
    json j = {{"leaves", r.leaves},
              {"vertices", items(r.vertices)},
              {"pairs", items(r.pairs)},
              {"f", r.f},
              {"group_order", r.group_order.get_str()},
              {"labelings", r.labelings.get_str()},
              {"consistent", pow2(r.f) == r.group_order}};
    return j.dump(indent);
}

}  // namespace phylocount
