#pragma once

#include "deltacalc/groebner.hpp"
#include "deltacalc/qt_ops.hpp"
#include "deltacalc/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deltacalc {

// Demazure character (key polynomial) of a weak composition
XPoly demazure(const std::vector<int>& gamma, OrderKind ord = OrderKind::neglex);

// isobaric divided difference pi_i(f) = (x_i f - x_{i+1} s_i f)/(x_i - x_{i+1})
XPoly isobaric_divided_difference(const XPoly& f, int i);

enum class IdealKind {
    coinvariant, // I_n = <e_1..e_n>
    delta,       // I_{n,k} = <e_n..e_{n-k+1}, x_i^k>
    delta_s,     // I_{n,k,s} = <x_i^s, e_n..e_{n-k+1}>
    tanisaki,    // I_lambda
    triple,      // I_{n,lambda,s}
    rank_init    // I^{(r)}_{n,k}
};

struct IdealParams {
    int n = 0;
    int k = 0;
    int s = 0;
    int r = 0;
    Partition lambda;
};

Ideal build_ideal(IdealKind kind, const IdealParams& p, OrderKind ord = OrderKind::neglex);

// m_{i,n}(lambda) = last i entries of the conjugate padded to length n
int m_in(int i, int n, const Partition& lambda);

// reduced GB of an ideal; for the delta family the known Demazure members are
// used as hints (same ideal, same reduced GB, faster convergence)
GB groebner_of(IdealKind kind, const IdealParams& p, OrderKind ord = OrderKind::neglex,
               bool use_hints = true);

// graded S_n-Frobenius of a quotient with S_n-stable ideal: a SymFunc over
// s with coefficients polynomial in q
SymFunc graded_frobenius(const Quotient& q, const Ideal& ideal);

// the two closed forms for grFrob(R_{n,k};q)
SymFunc syt_formula(int n, int k);
SymFunc hl_formula(int n, int k);

// point loci and orbit harmonics
struct PointLocus {
    int nvars = 0;
    std::vector<std::vector<Rat>> points;

    static PointLocus make(int nvars, std::vector<std::vector<Rat>> pts);
};

PointLocus locus_znk(int n, int k);             // Fubini-word locus, alpha_i = i-1
PointLocus locus_znks(int n, int k, int s);     // Z_{n,k,s}
PointLocus locus_zlambda(const Partition& lam); // Z_lambda (coordinates multiset)
PointLocus locus_orbit(int n, const std::vector<int>& multiset_values);
PointLocus locus_union(const PointLocus& a, const PointLocus& b);

// reduced GB of the vanishing ideal under graded_neglex (Buchberger-Moeller)
GB vanishing_ideal(const PointLocus& z);
// gr I = <top forms of a degree-compatible GB>, returned as a reduced GB
GB associated_graded(const GB& graded_order_gb);

struct HLPositivityReport {
    bool polynomial = true;
    bool positive = true;
    std::map<Partition, QTRat, RevLexLess> coefficients; // in the HL basis
};

HLPositivityReport hl_positivity_check(const SymFunc& graded_frob);

bool demazure_membership(const std::vector<int>& S, int n, int k);
bool ses_recursion_check(int n, int k, int s);

// grFrob of C[x]/gr I(Z) for an S_n-stable locus
SymFunc orbit_graded_frobenius(const PointLocus& z);

} // namespace deltacalc
