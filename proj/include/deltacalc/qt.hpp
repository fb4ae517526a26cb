#pragma once

#include "deltacalc/errors.hpp"
#include "deltacalc/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deltacalc {

// Exponent pair (deg_q, deg_t); std::pair's operator< is lexicographic, which
// is the canonical term order used for normalization and serialization.
using QTExp = std::pair<int, int>;

// Sparse polynomial in q, t over the rationals. No zero terms are stored.
class QTPoly {
public:
    QTPoly() = default;
    explicit QTPoly(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit QTPoly(long c) : QTPoly(Rat(c)) {}

    static QTPoly monomial(int dq, int dt, const Rat& c = Rat(1));
    static QTPoly var_q() { return monomial(1, 0); }
    static QTPoly var_t() { return monomial(0, 1); }

    const std::map<QTExp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int deg_q() const;
    int deg_t() const;

    // leading term in the lexicographic (deg_q, deg_t) order
    QTExp lead_exp() const;
    Rat lead_coeff() const;

    Rat coeff(int dq, int dt) const;
    void set(int dq, int dt, const Rat& c);

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    QTPoly& operator*=(const QTPoly& o) { return *this = *this * o; }
    QTPoly& operator*=(const Rat& c);

    bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QTPoly& o) const { return !(*this == o); }

    // substitute rationals for q and/or t (absent -> keep symbolic)
    QTPoly eval(const std::optional<Rat>& at_q, const std::optional<Rat>& at_t) const;

    // swap the roles of q and t
    QTPoly swap_qt() const;

    std::string str() const;

private:
    std::map<QTExp, Rat> terms_;
};

QTPoly qt_gcd(const QTPoly& a, const QTPoly& b);
// exact division; throws DivisionFailure if b does not divide a
QTPoly qt_div_exact(const QTPoly& a, const QTPoly& b);

// q^{top_degree} * f(1/q) for f a polynomial in q alone
QTPoly rev_q(const QTPoly& f, int top_degree);

// Normalized fraction num/den: gcd 1, den with leading coefficient 1 in the
// (deg_q, deg_t) lex order. Equality is structural.
class QTRat {
public:
    QTRat() : num_(), den_(Rat(1)) {}
    QTRat(const Rat& c) : num_(c), den_(Rat(1)) {}
    QTRat(long c) : num_(Rat(c)), den_(Rat(1)) {}
    QTRat(const QTPoly& p) : num_(p), den_(Rat(1)) {}
    QTRat(const QTPoly& num, const QTPoly& den) { assign(num, den); }

    static QTRat var_q() { return QTRat(QTPoly::var_q()); }
    static QTRat var_t() { return QTRat(QTPoly::var_t()); }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    QTRat operator-() const;
    QTRat inv() const;
    friend QTRat operator+(const QTRat& a, const QTRat& b);
    friend QTRat operator-(const QTRat& a, const QTRat& b);
    friend QTRat operator*(const QTRat& a, const QTRat& b);
    friend QTRat operator/(const QTRat& a, const QTRat& b);
    QTRat& operator+=(const QTRat& o) { return *this = *this + o; }
    QTRat& operator-=(const QTRat& o) { return *this = *this - o; }
    QTRat& operator*=(const QTRat& o) { return *this = *this * o; }
    QTRat& operator/=(const QTRat& o) { return *this = *this / o; }

    bool operator==(const QTRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QTRat& o) const { return !(*this == o); }

    QTRat eval(const std::optional<Rat>& at_q, const std::optional<Rat>& at_t) const;
    QTRat swap_qt() const { return QTRat(num_.swap_qt(), den_.swap_qt()); }

    // the constant value, if this fraction is a rational number
    std::optional<Rat> as_rat() const;

    std::string str() const;

private:
    void assign(const QTPoly& num, const QTPoly& den);
    QTPoly num_, den_;
};

QTRat qt_normalize(const QTPoly& num, const QTPoly& den);
QTRat qt_eval(const QTRat& f, const std::optional<Rat>& at_q, const std::optional<Rat>& at_t);

// q-analog helpers ([n]_q, [n]!_q, binomial, multinomial)
QTPoly q_int(int n);
QTPoly q_factorial(int n);
QTPoly q_binomial(int n, int k);
QTPoly q_multinomial(int n, const std::vector<int>& parts);

} // namespace deltacalc
