#pragma once

#include "deltacalc/errors.hpp"
#include "deltacalc/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace deltacalc {

// exponent vector over a fixed ambient variable count
using Expo = std::vector<int>;

inline int expo_deg(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

enum class OrderKind { neglex, graded_neglex };

// neglex: lexicographic with x_n > ... > x_1, i.e. compare exponents of the
// highest-index variable first. graded_neglex compares total degree first.
bool neglex_less(const Expo& a, const Expo& b);
bool graded_neglex_less(const Expo& a, const Expo& b);

struct TermOrder {
    OrderKind kind = OrderKind::neglex;
    bool less(const Expo& a, const Expo& b) const {
        return kind == OrderKind::neglex ? neglex_less(a, b) : graded_neglex_less(a, b);
    }
};

struct MonoLess {
    OrderKind kind = OrderKind::neglex;
    bool operator()(const Expo& a, const Expo& b) const {
        return kind == OrderKind::neglex ? neglex_less(a, b) : graded_neglex_less(a, b);
    }
};

// Sparse polynomial in x_1..x_n over Q.  Terms live in a map ordered by the
// active term order so the leading term is rbegin().
class XPoly {
public:
    explicit XPoly(int nvars = 0, OrderKind ord = OrderKind::neglex)
        : nvars_(nvars), terms_(MonoLess{ord}) {}

    static XPoly constant(int nvars, const Rat& c, OrderKind ord = OrderKind::neglex);
    static XPoly variable(int nvars, int i, OrderKind ord = OrderKind::neglex); // x_i, 1-based
    static XPoly monomial(int nvars, const Expo& e, const Rat& c,
                          OrderKind ord = OrderKind::neglex);

    int nvars() const { return nvars_; }
    OrderKind order() const { return terms_.key_comp().kind; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Rat, MonoLess>& terms() const { return terms_; }

    const Expo& lead_exp() const { return terms_.rbegin()->first; }
    const Rat& lead_coeff() const { return terms_.rbegin()->second; }
    int total_degree() const;
    bool is_homogeneous() const;

    Rat coeff(const Expo& e) const;
    void add_term(const Expo& e, const Rat& c);

    XPoly operator-() const;
    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly& operator*=(const Rat& c);
    XPoly mul_term(const Expo& e, const Rat& c) const;

    bool operator==(const XPoly& o) const;

    // polynomial with the same terms under a different order
    XPoly with_order(OrderKind ord) const;

    // variable substitution x_i -> x_{w(i)} (w one-line, 1-based)
    XPoly permuted(const std::vector<int>& w) const;

    // swap x_i, x_{i+1} (i 1-based)
    XPoly swapped(int i) const;

    // top-degree homogeneous component
    XPoly top_form() const;

    // evaluate at a rational point
    Rat eval(const std::vector<Rat>& pt) const;

    std::string str() const;

private:
    int nvars_;
    std::map<Expo, Rat, MonoLess> terms_;
};

// elementary symmetric e_d in the variables {x_i : i in vars} (1-based)
XPoly elementary_in(int nvars, int d, const std::vector<int>& vars, OrderKind ord);
// complete homogeneous h_d in the variables {x_i : i in vars}
XPoly homogeneous_in(int nvars, int d, const std::vector<int>& vars, OrderKind ord);
// x_i^k
XPoly power_of_var(int nvars, int i, int k, OrderKind ord);

// exact division by (x_i - x_{i+1}); throws DivisionFailure if not exact
XPoly divide_by_var_diff(const XPoly& f, int i);

} // namespace deltacalc
