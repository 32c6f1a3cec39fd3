#include "phylocount/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace phylocount {

TruncSeries TruncSeries::constant(const ExactRat& c, int order) {
    TruncSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(const ExactRat& c, int power, int order) {
    TruncSeries s(order);
    if (power >= 0 && power <= order) s.c_[power] = c;
    return s;
}

TruncSeries TruncSeries::polynomial(const std::vector<ExactRat>& coeffs, int order, int step) {
    TruncSeries s(order);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        size_t p = i * static_cast<size_t>(step);
        if (p <= static_cast<size_t>(order)) s.c_[p] += coeffs[i];
    }
    return s;
}

bool TruncSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const ExactRat& x) { return sgn(x) == 0; });
}

TruncSeries TruncSeries::truncated(int order) const {
    TruncSeries s(std::min(order, this->order()));
    for (int i = 0; i <= s.order(); ++i) s.c_[i] = c_[i];
    return s;
}

TruncSeries TruncSeries::shifted(int k) const {
    TruncSeries s(order());
    for (int i = 0; i <= order(); ++i) {
        int j = i + k;
        if (j < 0) {
            if (sgn(c_[i]) != 0) throw SeriesError("shift by z^" + std::to_string(k) + " is not exact");
            continue;
        }
        if (j <= order()) s.c_[j] = c_[i];
    }
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.order() + 1);
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (o.order() < order()) c_.resize(o.order() + 1);
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const ExactRat& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& x : s.c_) x = -x;
    return s;
}

TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
TruncSeries operator*(TruncSeries a, const ExactRat& s) { return a *= s; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (int j = 0; i + j <= n; ++j)
            if (sgn(b[j]) != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (sgn(c_[0]) == 0) throw SeriesError("division by a series with zero constant term");
    TruncSeries r(order());
    ExactRat inv0 = 1 / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        ExactRat acc = 0;
        for (int i = 1; i <= n; ++i)
            if (sgn(c_[i]) != 0) acc += c_[i] * r.c_[n - i];
        r.c_[n] = -acc * inv0;
    }
    return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

TruncSeries TruncSeries::inv_sqrt() const {
    if (c_[0] != 1) throw SeriesError("square root needs constant term 1");
    // y <- y + y (1 - s y^2) / 2, doubling the correct prefix each round
    TruncSeries y = constant(1, 0);
    int have = 1;
    while (have < order() + 1) {
        have = std::min(2 * have, order() + 1);
        int ord = have - 1;
        TruncSeries yy = y.truncated(ord);
        if (yy.order() < ord) {
            TruncSeries ext(ord);
            for (int i = 0; i <= yy.order(); ++i) ext[i] = yy[i];
            yy = ext;
        }
        TruncSeries e = constant(1, ord) - truncated(ord) * yy * yy;
        y = yy + yy * e * ExactRat(1, 2);
    }
    if (y.order() < order()) {
        TruncSeries ext(order());
        ext[0] = 1;
        return ext;
    }
    return y;
}

TruncSeries TruncSeries::sqrt() const { return *this * inv_sqrt(); }

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    TruncSeries r = constant(1, order()), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const { return c_ == o.c_; }

TruncSeries series_arith(SeriesOp op, const std::vector<TruncSeries>& xs) {
    if (xs.empty()) throw std::invalid_argument("series_arith: no operands");
    switch (op) {
        case SeriesOp::Add: {
            TruncSeries r = xs[0];
            for (size_t i = 1; i < xs.size(); ++i) r += xs[i];
            return r;
        }
        case SeriesOp::Mul: {
            TruncSeries r = xs[0];
            for (size_t i = 1; i < xs.size(); ++i) r = r * xs[i];
            return r;
        }
        case SeriesOp::Div:
            if (xs.size() != 2) throw std::invalid_argument("series_arith: div takes two operands");
            return xs[0] / xs[1];
        case SeriesOp::Sqrt:
            if (xs.size() != 1) throw std::invalid_argument("series_arith: sqrt takes one operand");
            return xs[0].sqrt();
    }
    throw std::invalid_argument("series_arith: bad op");
}

ExactRat binom_coeff_extract(const ExactRat& alpha, long m, long n) {
    ExactRat twice = alpha * 2;
    twice.canonicalize();
    if (twice.get_den() != 1) throw std::invalid_argument("binom_coeff_extract: alpha must be a half-integer");
    long j = n - m;
    if (j < 0) return 0;
    ExactRat x = alpha + (j - 1), num = 1;
    for (long i = 0; i < j; ++i) num *= x - i;
    ExactRat r = num * pow2q(j) / ExactRat(factorial(static_cast<unsigned long>(j)));
    r.canonicalize();
    return r;
}

const PolynomialPair& egf_polynomials(NetworkClass cls, int k) {
    static const PolynomialPair tc[3] = {
        {{0, 1}, {0, 1}},
        {{0, 0, 0, 8, -1}, {0, 0, 0, 8}},
        {{0, 0, 0, 0, 0, 175, -35}, {0, 0, 0, 0, 0, 175, 34}},
    };
    static const PolynomialPair nn[3] = {
        {{2, -3}, {2, -1}},
        {{0, -8, 50, -66, 11}, {0, -8, 42, -28}},
        {{0, 0, 64, -628, 2392, -3065, 877}, {0, 0, 64, -564, 1860, -1455, 110}},
    };
    if (k < 1 || k > 3) throw std::invalid_argument("unsupported k = " + std::to_string(k) + " (need 1..3)");
    return cls == NetworkClass::TreeChild ? tc[k - 1] : nn[k - 1];
}

namespace {

std::vector<ExactRat> to_rat(const std::vector<long>& v) {
    std::vector<ExactRat> r;
    for (long x : v) r.emplace_back(x);
    return r;
}

// (ã(w^step) - b̃(w^step) sqrt(1-2w^step)) / (1-2w^step)^(2k-1/2)
TruncSeries quotient(NetworkClass cls, int k, int order, int step) {
    const auto& pp = egf_polynomials(cls, k);
    TruncSeries base = TruncSeries::polynomial({ExactRat(1), ExactRat(-2)}, order, step);
    TruncSeries a = TruncSeries::polynomial(to_rat(pp.a), order, step);
    TruncSeries b = TruncSeries::polynomial(to_rat(pp.b), order, step);
    TruncSeries num = a - b * base.sqrt();
    TruncSeries den = base.pow(2 * k) * base.inv_sqrt();
    return num / den;
}

}  // namespace

TruncSeries egf(NetworkClass cls, int k, int order) {
    if (order < 1) throw std::invalid_argument("egf: order must be >= 1");
    return quotient(cls, k, order, 2).shifted(1);
}

TruncSeries quotient_series(NetworkClass cls, int k, int order) { return quotient(cls, k, order, 1); }

ExactInt extract_count(const TruncSeries& s, int n) {
    if (n < 0 || n > s.order())
        throw SeriesError("index " + std::to_string(n) + " beyond truncation order " + std::to_string(s.order()));
    ExactRat v = s[n] * ExactRat(factorial(static_cast<unsigned long>(n)));
    v.canonicalize();
    if (v.get_den() != 1) throw SeriesError("n! c_n is not an integer at n = " + std::to_string(n));
    return v.get_num();
}

ExactRat assembled_coefficient(NetworkClass cls, int k, long n) {
    const auto& pp = egf_polynomials(cls, k);
    ExactRat alpha_a = ExactRat(4 * k - 1, 2), alpha_b = 2 * k - 1;
    ExactRat r = 0;
    for (size_t m = 0; m < pp.a.size(); ++m)
        if (pp.a[m]) r += pp.a[m] * binom_coeff_extract(alpha_a, static_cast<long>(m), n);
    for (size_t m = 0; m < pp.b.size(); ++m)
        if (pp.b[m]) r -= pp.b[m] * binom_coeff_extract(alpha_b, static_cast<long>(m), n);
    r.canonicalize();
    return r;
}

int default_order() {
    if (const char* e = std::getenv("PHYLOCOUNT_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v >= 1 && v <= 1000) return static_cast<int>(v);
    }
    return 31;
}

}  // namespace phylocount
