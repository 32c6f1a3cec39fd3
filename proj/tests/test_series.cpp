#include "doctest.h"
#include "phylocount/closed_form.hpp"
#include "phylocount/series.hpp"

using namespace phylocount;

TEST_CASE("truncated series arithmetic") {
    TruncSeries one_minus_z = TruncSeries::polynomial({1, -1}, 10);
    TruncSeries geo = one_minus_z.inverse();
    for (int i = 0; i <= 10; ++i) CHECK(geo[i] == 1);
    CHECK(one_minus_z * geo == TruncSeries::constant(1, 10));

    // sqrt(1 - 4z) = 1 - 2 sum Catalan(n-1) z^n
    TruncSeries s = TruncSeries::polynomial({1, -4}, 12).sqrt();
    const long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 11; ++n) CHECK(s[n] == -2 * catalan[n - 1]);
    CHECK(s * s == TruncSeries::polynomial({1, -4}, 12));

    TruncSeries z = TruncSeries::monomial(1, 1, 6);
    CHECK(z.shifted(-1) == TruncSeries::constant(1, 6));
    CHECK_THROWS_AS(TruncSeries::constant(1, 6).shifted(-1), SeriesError);
    CHECK_THROWS_AS(z.inverse(), SeriesError);
    CHECK_THROWS_AS(TruncSeries::constant(4, 3).inv_sqrt(), SeriesError);
    CHECK(TruncSeries::polynomial({1, 1}, 8).pow(3) == TruncSeries::polynomial({1, 3, 3, 1}, 8));
    CHECK(series_arith(SeriesOp::Div, {z, one_minus_z}) == z * geo);
}

TEST_CASE("binomial coefficient extraction") {
    // [z^n] z^m (1-2z)^(-1/2) = binom(2j, j) / 2^j * 2^j ... check against the series
    const int order = 20;
    TruncSeries base = TruncSeries::polynomial({1, -2}, order);
    for (int twice : {1, 3, 5, 7}) {
        ExactRat alpha(twice, 2);
        TruncSeries f = base.inv_sqrt().pow(twice);  // (1-2z)^(-twice/2)
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= order; ++n) CHECK(binom_coeff_extract(alpha, m, n) == f.shifted(m)[n]);
    }
    for (int e : {1, 3, 5}) {
        TruncSeries f = base.inverse().pow(e);
        for (int n = 0; n <= order; ++n) CHECK(binom_coeff_extract(e, 0, n) == f[n]);
    }
    CHECK_THROWS_AS(binom_coeff_extract(ExactRat(1, 3), 0, 2), std::invalid_argument);
}

TEST_CASE("egf coefficients") {
    TruncSeries t2 = egf(NetworkClass::TreeChild, 2, 17);
    // 42 leaf-labeled networks with 3 leaves; n = 9 vertices
    CHECK(extract_count(t2, 9) == 42 * factorial(9) / factorial(3));
    CHECK(extract_count(t2, 9) == 2540160);
    CHECK(extract_count(t2, 8) == 0);
    CHECK(extract_count(egf(NetworkClass::TreeChild, 1, 5), 5) == 2 * factorial(5) / factorial(2));
    CHECK_THROWS_AS(extract_count(t2, 18), SeriesError);

    for (auto cls : {NetworkClass::TreeChild, NetworkClass::Normal})
        for (int k = 1; k <= 3; ++k) {
            TruncSeries q = quotient_series(cls, k, 25);
            for (int n = 0; n <= 25; ++n) CHECK(assembled_coefficient(cls, k, n) == q[n]);
        }
}
