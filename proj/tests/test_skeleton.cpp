#include "doctest.h"
#include "phylocount/series.hpp"
#include "phylocount/skeleton.hpp"

using namespace phylocount;

TEST_CASE("jets are multilinear") {
    const int order = 8;
    JetSeries y1 = JetSeries::marker_sum(1, order), y2 = JetSeries::marker_sum(2, order);
    CHECK((y1 * y1).component(0).is_zero());
    CHECK((y1 * y1).component(1).is_zero());
    JetSeries p = y1 * y2;
    CHECK(p.component(3) == TruncSeries::constant(1, order));
    // 1 / (1 - y1 - y2) = 1 + y1 + y2 + 2 y1 y2
    JetSeries one = JetSeries::scalar(TruncSeries::constant(1, order));
    JetSeries inv = (one - y1 - y2).inverse();
    CHECK(inv.component(0) == TruncSeries::constant(1, order));
    CHECK(inv.component(1) == TruncSeries::constant(1, order));
    CHECK(inv.component(3) == TruncSeries::constant(2, order));
    JetSeries r = (one + y1 + y2).sqrt();
    CHECK(r * r == (one + y1 + y2).truncated(order));
}

TEST_CASE("Motzkin series") {
    const int order = 12;
    JetSeries zero(order);
    TruncSeries m = Y_operator(motzkin_M(zero, order), 0);
    CHECK(m[0] == 0);
    CHECK(m[1] == 1);
    // at y = 0, M = z + z M^2 / 2
    TruncSeries rhs = TruncSeries::monomial(1, 1, order) + (m * m).shifted(1) * ExactRat(1, 2);
    CHECK(m == rhs.truncated(order));
    // M~ = M / (1 + y z) is M itself when y = 0
    CHECK(Y_operator(motzkin_Mtilde(zero, order), 0) == m);
}

TEST_CASE("expression evaluator") {
    ExpressionEvaluator ev(10);
    JetSeries a = ev.evaluate("z^2 Mt(y1+y2)^2");
    JetSeries b = motzkin_Mtilde(JetSeries::marker_sum(3, 10), 10).pow(2) *
                  JetSeries::scalar(TruncSeries::monomial(1, 2, 10));
    CHECK(a == b);
    CHECK_THROWS_AS(ev.evaluate("Q(y1)"), std::invalid_argument);
    CHECK_THROWS_AS(ev.evaluate("Ph(y1,y2)"), std::invalid_argument);
    CHECK_THROWS_AS(ev.evaluate("Mt(y4)"), std::invalid_argument);
}

TEST_CASE("case sums reproduce the EGF") {
    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 2; k <= 3; ++k) CHECK(case_sum(cls, k, 31) == egf(cls, k, 31));
}

TEST_CASE("term lists carry their provenance") {
    auto count = [](NetworkClass cls, int k, TermOrigin o) {
        int c = 0;
        for (const auto& t : skeleton_terms(cls, k)) c += t.origin == o;
        return c;
    };
    CHECK(count(NetworkClass::TreeChild, 2, TermOrigin::Reconstructed) == 1);
    CHECK(count(NetworkClass::TreeChild, 3, TermOrigin::Reconstructed) == 1);
    CHECK(count(NetworkClass::TreeChild, 3, TermOrigin::Corrected) == 3);
    CHECK(count(NetworkClass::Normal, 3, TermOrigin::Completion) == 1);
    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 2; k <= 3; ++k)
            for (const auto& t : skeleton_terms(cls, k))
                if (t.origin != TermOrigin::Printed) CHECK_FALSE(t.note.empty());
    CHECK_THROWS_AS(skeleton_terms(NetworkClass::TreeChild, 1), std::invalid_argument);
}

TEST_CASE("dropping a corrected term breaks the equality") {
    // the printed tree-child k=3 skeleton (c) first term overcounts
    ExpressionEvaluator ev(15);
    TruncSeries printed = Y_operator(ev.evaluate("z^4 Mt(y1+y2+y3)^2 Ph(0,y1+y2+y3,0)^4"), 7);
    TruncSeries fixed = Y_operator(ev.evaluate("z^4 Mt(y1+y2+y3)^2 Ph(y2,y1+y2+y3,0) Ph(0,y1+y2+y3,0)^3"), 7);
    CHECK_FALSE(printed == fixed);
}

TEST_CASE("audit log is deterministic") {
    std::vector<AuditLine> a, b;
    case_sum(NetworkClass::Normal, 3, 21, &a);
    case_sum(NetworkClass::Normal, 3, 21, &b);
    std::string sa = format_audit(NetworkClass::Normal, 3, a), sb = format_audit(NetworkClass::Normal, 3, b);
    CHECK(sa == sb);
    CHECK(sa.find("completion") != std::string::npos);
    CHECK(a.size() == skeleton_terms(NetworkClass::Normal, 3).size());
}
