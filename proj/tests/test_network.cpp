#include "doctest.h"
#include "phylocount/canonical.hpp"
#include "phylocount/enumerate.hpp"
#include "support.hpp"

using namespace phylocount;

namespace {

NetworkError::Kind error_kind(const std::string& text) {
    try {
        parse_network(text);
    } catch (const NetworkError& e) {
        return e.kind();
    }
    FAIL("expected a NetworkError for:\n" << text);
    return NetworkError::Kind::Syntax;
}

const char* cherry = "network c\nvertices 3\nedge 0 1\nedge 0 2\nleaf 1 a\nleaf 2 b\nend\n";

}  // namespace

TEST_CASE("cherry parses") {
    PhyloNetwork n = parse_network(cherry);
    CHECK(n.size() == 3);
    CHECK(n.leaf_count() == 2);
    CHECK(n.reticulation_count() == 0);
    CHECK(n.root() == 0);
    CHECK(n.kind(1) == VertexKind::Leaf);
    CHECK(n.label(2) == "b");
}

TEST_CASE("serialize is canonical and round trips") {
    const char* messy = "# comment\nnetwork c\nvertices 3\nedge 0 2   # trailing\n\nedge 0 1\nleaf 2 b\nleaf 1 a\nend\n";
    PhyloNetwork n = parse_network(messy);
    CHECK(serialize_network(n) == cherry);
    CHECK(parse_network(serialize_network(n)) == n);
    for (const char* f : {"stacked_reticulations.pnet", "stacked_reticulations_wide.pnet", "rooting_pair.pnet"}) {
        PhyloNetwork m = load_fixture(f);
        CHECK(parse_network(serialize_network(m)) == m);
    }
}

TEST_CASE("parse errors") {
    using K = NetworkError::Kind;
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedge 0 2\nleaf 1 a\nleaf 2 b\n") == K::Syntax);  // no end
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedeg 0 2\nend\n") == K::Syntax);
    CHECK(error_kind("network x\nvertices 3\nedge 0 5\nedge 0 2\nleaf 1 a\nleaf 2 b\nend\n") == K::Syntax);  // id out of range
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedge 0 1\nleaf 1 a\nleaf 2 b\nend\n") == K::ParallelEdge);
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedge 0 2\nleaf 1 a\nleaf 2 a\nend\n") == K::Label);
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedge 0 2\nleaf 1 1\nleaf 2 3\nend\n") == K::Label);
    CHECK(error_kind("network x\nvertices 3\nedge 0 1\nedge 0 2\nleaf 0 a\nleaf 2 b\nend\n") == K::Label);
    // root with one child
    CHECK(error_kind("network x\nvertices 2\nedge 0 1\nleaf 1 a\nend\n") == K::Degree);
    // 1 -> 2 -> 3 -> 1 plus a separate cherry
    CHECK(error_kind("network x\nvertices 7\nedge 0 4\nedge 0 5\nedge 1 2\nedge 2 3\nedge 3 1\nedge 1 6\nedge 2 6\n"
                     "end\n") != K::Syntax);
    try {
        parse_network("network x\nvertices 3\nedge 0 1\nbogus\nend\n");
    } catch (const NetworkError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("tree-child and normal predicates") {
    PhyloNetwork a = load_fixture("stacked_reticulations.pnet");
    CHECK(a.reticulation_count() == 2);
    CHECK(a.size() == 2 * a.leaf_count() + 2 * a.reticulation_count() - 1);
    PredicateResult tc = is_tree_child(a);
    CHECK_FALSE(tc.ok);
    CHECK_FALSE(tc.violations.empty());
    CHECK_FALSE(is_normal(a).ok);

    // tree vertex 1 -> reticulation 3 plus path 1 -> 2 -> 3
    PhyloNetwork s = parse_network(
        "network s\nvertices 7\nedge 0 1\nedge 0 4\nedge 1 2\nedge 1 3\nedge 2 3\nedge 2 5\nedge 3 6\n"
        "leaf 4 a\nleaf 5 b\nleaf 6 c\nend\n");
    CHECK(is_tree_child(s).ok);
    PredicateResult nr = is_normal(s);
    CHECK_FALSE(nr.ok);
    REQUIRE(nr.violations.size() == 1);

    for (const Dag& t : enumerate_trees(5)) {
        CHECK(is_tree_child(t));
        CHECK(is_normal(t));
    }
}

TEST_CASE("canonical codes") {
    PhyloNetwork n = parse_network(cherry);
    PhyloNetwork swapped = parse_network("network c\nvertices 3\nedge 0 1\nedge 0 2\nleaf 1 b\nleaf 2 a\nend\n");
    PhyloNetwork renumbered = parse_network("network c\nvertices 3\nedge 2 0\nedge 2 1\nleaf 0 b\nleaf 1 a\nend\n");
    CHECK(canonical_code(n, false) == canonical_code(swapped, false));
    CHECK(canonical_code(n, true) != canonical_code(parse_network(
                                        "network c\nvertices 5\nedge 0 1\nedge 0 2\nedge 2 3\nedge 2 4\n"
                                        "leaf 1 a\nleaf 3 b\nleaf 4 c\nend\n"),
                                    true));
    CHECK(canonical_code(swapped, true) == canonical_code(renumbered, true));
    // same labels on the same shape: the cherry is symmetric so swapped labels are isomorphic
    CHECK(canonical_code(n, true) == canonical_code(swapped, true));

    // labeled caterpillar ((a,b),c) vs ((a,c),b): different in label-respecting mode only
    PhyloNetwork c1 = parse_network(
        "network c\nvertices 5\nedge 0 1\nedge 0 2\nedge 1 3\nedge 1 4\nleaf 2 c\nleaf 3 a\nleaf 4 b\nend\n");
    PhyloNetwork c2 = parse_network(
        "network c\nvertices 5\nedge 0 1\nedge 0 2\nedge 1 3\nedge 1 4\nleaf 2 b\nleaf 3 a\nleaf 4 c\nend\n");
    CHECK(canonical_code(c1, true) != canonical_code(c2, true));
    CHECK(canonical_code(c1, false) == canonical_code(c2, false));
}

TEST_CASE("codes agree with explicit isomorphism search") {
    EnumerateOptions opt;
    opt.keep_networks = true;
    for (auto [cls, k, l] : {std::tuple{NetworkClass::TreeChild, 1, 3}, std::tuple{NetworkClass::Normal, 2, 4}}) {
        auto nets = enumerate_networks(cls, k, l, opt).networks;
        // one relabeled copy per shape gives both equal and unequal pairs
        for (size_t i = 0; i < nets.size(); ++i)
            for (size_t j = 0; j < nets.size(); ++j) {
                bool same_shape = canonical_key(nets[i], false) == canonical_key(nets[j], false);
                CHECK(same_shape == !find_isomorphism(nets[i], nets[j], false).empty());
                bool same = canonical_key(nets[i], true) == canonical_key(nets[j], true);
                CHECK(same == (i == j));
                CHECK(same == !find_isomorphism(nets[i], nets[j], true).empty());
            }
    }
}

TEST_CASE("enumerated networks have n = 2l + 2k - 1 and normal implies tree-child") {
    EnumerateOptions opt;
    opt.keep_networks = true;
    for (int k = 0; k <= 2; ++k)
        for (const Dag& d : enumerate_networks(NetworkClass::TreeChild, k, 4, opt).networks) {
            CHECK(d.size() == 2 * d.leaf_count() + 2 * d.reticulation_count() - 1);
            if (is_normal(d)) CHECK(is_tree_child(d));
        }
}
