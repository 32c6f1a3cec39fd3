#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "phylocount/series.hpp"

namespace phylocount {

// Series-valued multilinear polynomial in markers y1, y2, y3 with y_i^2 = 0.
// Component m holds the coefficient of the product of the markers in bitmask m.
class JetSeries {
public:
    JetSeries() = default;
    explicit JetSeries(int order);
    static JetSeries scalar(const TruncSeries& s);
    // y_i summed over the bits of mask (mask 0 gives the zero jet)
    static JetSeries marker_sum(unsigned mask, int order);

    int order() const { return order_; }
    bool has(unsigned m) const { return present_[m]; }
    TruncSeries component(unsigned m) const;
    void set(unsigned m, TruncSeries s);

    JetSeries& operator+=(const JetSeries& o);
    JetSeries& operator-=(const JetSeries& o);
    JetSeries operator*(const JetSeries& o) const;
    JetSeries scaled(const ExactRat& s) const;
    JetSeries shifted(int k) const;
    JetSeries truncated(int order) const;
    JetSeries inverse() const;
    JetSeries sqrt() const;
    JetSeries pow(int e) const;

    bool operator==(const JetSeries& o) const;

private:
    int order_ = 0;
    std::array<TruncSeries, 8> comp_;
    std::array<bool, 8> present_{};
};

JetSeries operator+(JetSeries a, const JetSeries& b);
JetSeries operator-(JetSeries a, const JetSeries& b);

// M(z,y) = (1+yz)(1 - sqrt(1-2z^2-4yz^3)) / (z(1+2yz))
JetSeries motzkin_M(const JetSeries& y, int order);
// trees not starting with a unary vertex: M / (1+yz)
JetSeries motzkin_Mtilde(const JetSeries& y, int order);
// (1+z yh) / (1 - z M(z,yt) - z^2 y Mtilde(z,yt))
JetSeries path_Phat(const JetSeries& y, const JetSeries& yt, const JetSeries& yh, int order);
// (1+z yh) / (1 - (z + z^2 y + z^2 yb) Mtilde(z,yt))
JetSeries path_Ptilde(const JetSeries& y, const JetSeries& yt, const JetSeries& yb, const JetSeries& yh,
                      int order);
// older normal path series: (1+z yh) / (1 - (z + 2 z^2 y) Mtilde(z,yt))
JetSeries path_P(const JetSeries& y, const JetSeries& yt, const JetSeries& yh, int order);

// coefficient of the product of the given markers, all others set to 0
TruncSeries Y_operator(const JetSeries& j, unsigned markers);

enum class TermOrigin { Printed, Corrected, Reconstructed, Completion };
const char* to_string(TermOrigin o);

struct SkeletonTerm {
    std::string locus;  // skeleton and case
    ExactRat coef;      // sign and symmetry factor
    unsigned derive;    // markers differentiated (Y operator mask)
    std::string expr;   // product of z^a, M, Mt, Ph, Pt, P factors
    TermOrigin origin;
    std::string note;   // what was changed, for anything not printed verbatim
};

const std::vector<SkeletonTerm>& skeleton_terms(NetworkClass cls, int k);

// Evaluates an expression such as "z^3 Mt(y1+y2)^2 Ph(0,y1+y2,0)^3".
class ExpressionEvaluator {
public:
    explicit ExpressionEvaluator(int order) : order_(order) {}
    JetSeries evaluate(const std::string& expr);

private:
    JetSeries call(const std::string& name, const std::vector<unsigned>& args);
    int order_;
    std::map<std::string, JetSeries> cache_;
};

struct AuditLine {
    const SkeletonTerm* term;
    TruncSeries contribution;  // coef * Y(...), before the 2^k division
};

// Sum of the term list, divided by 2^k; k in {2,3}.
TruncSeries case_sum(NetworkClass cls, int k, int order, std::vector<AuditLine>* audit = nullptr);

std::string format_audit(NetworkClass cls, int k, const std::vector<AuditLine>& lines, int first_counts = 4);

}  // namespace phylocount
