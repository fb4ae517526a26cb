#pragma once

#include "deltacalc/partition.hpp"
#include "deltacalc/qt.hpp"

#include <functional>
#include <map>
#include <string>

namespace deltacalc {

enum class SfBasis { m, e, h, p, s, HL_q, Mac_qt };

std::string basis_name(SfBasis b);
SfBasis basis_from_name(const std::string& s);

// Homogeneous symmetric function of fixed degree: partition-indexed
// coefficients over Q(q,t).  Partitions iterate in reverse-lex order.
struct SymFunc {
    int degree = 0;
    SfBasis basis = SfBasis::s;
    std::map<Partition, QTRat, RevLexLess> coeffs;

    SymFunc() = default;
    SymFunc(int deg, SfBasis b) : degree(deg), basis(b) {}

    static SymFunc single(int deg, SfBasis b, const Partition& lam, const QTRat& c = QTRat(1));

    QTRat coeff(const Partition& lam) const;
    void add(const Partition& lam, const QTRat& c);
    bool is_zero() const { return coeffs.empty(); }

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o); // same basis & degree
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc& operator*=(const QTRat& c);
    friend SymFunc operator*(const QTRat& c, SymFunc f) { return f *= c; }

    bool operator==(const SymFunc& o) const;

    // apply a map to every coefficient (e.g. specialization)
    SymFunc mapped(const std::function<QTRat(const QTRat&)>& f) const;

    std::string str() const;
};

// change of basis among {m,e,h,p,s}; HL_q / Mac_qt inputs are s-expansions in
// disguise and cannot be targets here
SymFunc convert(const SymFunc& f, SfBasis target);

QTRat hall_inner(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);

// multiplicative rescaling p_k -> scale(k) p_k (plethystic substitution by a
// q,t-expression applied to the alphabet)
using PlethysmScale = std::function<QTRat(int)>;
PlethysmScale pleth_one_minus_q();
PlethysmScale pleth_one_minus_t();
PlethysmScale pleth_macdonald_kernel();
SymFunc plethystic_scale(const SymFunc& f, const PlethysmScale& scale);

// Frobenius image from a class function (values on cycle types)
SymFunc frobenius_from_character(int n, const std::map<Partition, Rat, RevLexLess>& chi);

// product of symmetric functions (via the p basis), result in the s basis
SymFunc sf_multiply(const SymFunc& f, const SymFunc& g);

// number of standard Young tableaux of shape lam
Int syt_count(const Partition& lam);

// Kostka number K_{lam,mu} = #SSYT(lam, content mu)
long kostka_number(const Partition& lam, const Partition& mu);

} // namespace deltacalc
