#include "doctest.h"
#include "phylocount/pipeline.hpp"

using namespace phylocount;

TEST_CASE("every method gives the same count") {
    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 1; k <= 3; ++k) {
            long l = k + 1;
            ExactInt ref = count_by(Method::ClosedForm, cls, k, Labeling::Leaf, l, 31);
            CHECK(count_by(Method::Series, cls, k, Labeling::Leaf, l, 31) == ref);
            CHECK(count_by(Method::Enumeration, cls, k, Labeling::Leaf, l, 31) == ref);
            if (k >= 2) CHECK(count_by(Method::Skeleton, cls, k, Labeling::Leaf, l, 31) == ref);
            long n = vertex_count(k, l);
            ExactInt vref = count_by(Method::ClosedForm, cls, k, Labeling::Vertex, n, 31);
            CHECK(count_by(Method::Enumeration, cls, k, Labeling::Vertex, n, 31) == vref);
            CHECK(count_by(Method::Series, cls, k, Labeling::Vertex, n + 1, 31) == 0);
        }
    // the series method extends past the requested order when needed
    CHECK(count_by(Method::Series, NetworkClass::Normal, 3, Labeling::Leaf, 20, 5) ==
          count_by(Method::ClosedForm, NetworkClass::Normal, 3, Labeling::Leaf, 20, 5));
}

TEST_CASE("applicability") {
    CHECK_FALSE(method_applicable(Method::Skeleton, 1, Labeling::Leaf, 3));
    CHECK(method_applicable(Method::Enumeration, 2, Labeling::Leaf, 6));
    CHECK_FALSE(method_applicable(Method::Enumeration, 2, Labeling::Leaf, 7));
    CHECK_THROWS_AS(count_by(Method::ClosedForm, NetworkClass::Normal, 4, Labeling::Leaf, 3, 31),
                    std::invalid_argument);
}

TEST_CASE("verify suite passes") {
    VerifyOptions opt;
    opt.order = 21;
    opt.max_enumeration_n = 9;
    auto lines = verify_suite(opt);
    CHECK_FALSE(lines.empty());
    for (const auto& line : lines) {
        CAPTURE(line.check);
        CHECK(line.ok);
    }
}
