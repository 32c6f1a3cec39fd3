#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "phylocount/exact.hpp"
#include "phylocount/network.hpp"

namespace phylocount {

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Truncated power series in z over exact rationals, coefficients c_0..c_N.
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(order + 1) {}
    static TruncSeries constant(const ExactRat& c, int order);
    static TruncSeries monomial(const ExactRat& c, int power, int order);
    // coefficients of a polynomial in z^step (so step = 2 substitutes z^2)
    static TruncSeries polynomial(const std::vector<ExactRat>& coeffs, int order, int step = 1);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const ExactRat& operator[](int i) const { return c_[i]; }
    ExactRat& operator[](int i) { return c_[i]; }
    bool is_zero() const;

    TruncSeries truncated(int order) const;
    // multiply by z^k; negative k requires the low coefficients to vanish
    TruncSeries shifted(int k) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const ExactRat& s);
    TruncSeries operator-() const;

    TruncSeries inverse() const;      // needs invertible constant term
    TruncSeries sqrt() const;         // needs constant term 1
    TruncSeries inv_sqrt() const;     // Newton iteration
    TruncSeries pow(int e) const;

    bool operator==(const TruncSeries& o) const;

private:
    std::vector<ExactRat> c_;
};

TruncSeries operator+(TruncSeries a, const TruncSeries& b);
TruncSeries operator-(TruncSeries a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(TruncSeries a, const ExactRat& s);
TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

enum class SeriesOp { Add, Mul, Div, Sqrt };
TruncSeries series_arith(SeriesOp op, const std::vector<TruncSeries>& operands);

// [z^n] z^m (1-2z)^(-alpha) = 2^(n-m) binom(n-m+alpha-1, n-m); alpha an integer or half-integer
ExactRat binom_coeff_extract(const ExactRat& alpha, long m, long n);

struct PolynomialPair {
    std::vector<long> a;  // coefficients of ã_k(z), index = power
    std::vector<long> b;  // coefficients of b̃_k(z)
};
const PolynomialPair& egf_polynomials(NetworkClass cls, int k);

// z (ã(z^2) - b̃(z^2) sqrt(1-2z^2)) / (1-2z^2)^(2k-1/2)
TruncSeries egf(NetworkClass cls, int k, int order);

// n! c_n; throws SeriesError when not an integer
ExactInt extract_count(const TruncSeries& s, int n);

// [w^n] (ã(w) - b̃(w) sqrt(1-2w)) / (1-2w)^(2k-1/2), assembled termwise from binom_coeff_extract
ExactRat assembled_coefficient(NetworkClass cls, int k, long n);
// the same coefficient read off a directly expanded series in w
TruncSeries quotient_series(NetworkClass cls, int k, int order);

int default_order();  // PHYLOCOUNT_ORDER or 31

}  // namespace phylocount
