#include "doctest.h"
#include "phylocount/closed_form.hpp"
#include "phylocount/series.hpp"

using namespace phylocount;

namespace {

std::vector<std::string> seq(NetworkClass cls, int k, long lo, long hi) {
    std::vector<std::string> out;
    for (long l = lo; l <= hi; ++l) out.push_back(count_leaf_labeled(cls, k, l).get_str());
    return out;
}

}  // namespace

TEST_CASE("published leaf-labeled sequences") {
    using V = std::vector<std::string>;
    CHECK(seq(NetworkClass::TreeChild, 2, 3, 8) == V{"42", "1272", "30300", "696600", "16418430", "405755280"});
    CHECK(seq(NetworkClass::TreeChild, 3, 4, 8) == V{"2544", "154500", "6494400", "241204950", "8609378400"});
    CHECK(seq(NetworkClass::Normal, 2, 4, 8) == V{"48", "2310", "78120", "2377620", "70749000"});
    CHECK(seq(NetworkClass::Normal, 3, 5, 8) == V{"1920", "184680", "11059650", "547444800"});
    CHECK(seq(NetworkClass::TreeChild, 1, 2, 5) == V{"2", "21", "228", "2805"});
    CHECK(seq(NetworkClass::Normal, 1, 2, 5) == V{"0", "3", "54", "855"});
}

TEST_CASE("closed forms match the series") {
    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 1; k <= 3; ++k) {
            TruncSeries e = egf(cls, k, 51);
            for (long n = 1; n <= 51; ++n) CHECK(extract_count(e, n) == count_vertex_labeled(cls, k, n));
        }
}

TEST_CASE("below the validity threshold the count is zero") {
    const Formula& f = formula(NetworkClass::TreeChild, 1);
    CHECK(f.valid_from == 1);
    // the raw expression is -1/2 at n = 1 (m = 0)
    ExactRat raw = f.r(0) - f.p(0);
    CHECK(raw == ExactRat(-1, 2));
    CHECK(count_vertex_labeled(NetworkClass::TreeChild, 1, 1) == 0);
    CHECK(formula(NetworkClass::Normal, 3).valid_from == 6);
    CHECK(count_vertex_labeled(NetworkClass::Normal, 3, 8) == 0);
}

TEST_CASE("direct leaf formulas") {
    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 2; k <= 3; ++k)
            for (long l = 1; l <= 30; ++l) CHECK(count_leaf_labeled_direct(cls, k, l) == count_leaf_labeled(cls, k, l));
    CHECK_THROWS_AS(count_leaf_labeled_direct(NetworkClass::TreeChild, 1, 3), std::invalid_argument);
}

TEST_CASE("estimates") {
    Estimate a = estimate_ck(NetworkClass::TreeChild, 1, 201);
    CHECK(a.approx > 0);
    CHECK(a.text.size() >= 30);
    CHECK(agree_to_digits(a, a, 30));
    Estimate b{"", a.approx * 1.004};
    CHECK(agree_to_digits(a, b, 3));
    CHECK_FALSE(agree_to_digits(a, b, 4));
    CHECK_THROWS_AS(estimate_ck(NetworkClass::TreeChild, 1, 200), std::invalid_argument);
}

TEST_CASE("count table") {
    CountTable t;
    t.add({NetworkClass::Normal, Labeling::Leaf, 2, 4}, Method::ClosedForm, 48);
    t.add({NetworkClass::Normal, Labeling::Leaf, 2, 4}, Method::Enumeration, 48);
    CHECK(t.mismatches().empty());
    CHECK(t.to_csv() == "class,labeling,k,size,count,method\nnormal,leaf,2,4,48,closed-form\nnormal,leaf,2,4,48,enumeration\n");
    t.add({NetworkClass::Normal, Labeling::Leaf, 2, 4}, Method::Series, 47);
    CHECK(t.mismatches().size() == 1);
    CHECK(parse_method("skeleton") == Method::Skeleton);
    CHECK_THROWS(parse_labeling("edge"));
}
