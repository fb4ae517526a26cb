#pragma once

#include "deltacalc/symfunc.hpp"

#include <map>
#include <vector>

namespace deltacalc {

// standard subword decomposition of a word with partition content
std::vector<std::vector<int>> standard_subwords(const std::vector<int>& w);
long cocharge_perm(const std::vector<int>& v);
long cocharge(const std::vector<int>& w);

// Hall-Littlewood polynomial via cocharge Kostka coefficients:
//   H_mu(x;q) = sum_lam K~_{lam,mu}(q) s_lam
SymFunc hall_littlewood(const Partition& mu);
// the literal monomial-weighted sum over SSYT of content mu (diagnostic; this
// disagrees with the Schur reading already at mu = (1,1))
SymFunc hall_littlewood_monomial_sum(const Partition& mu);

struct MacdonaldBasis {
    int n = 0;
    std::map<Partition, SymFunc, RevLexLess> table; // each H_mu in the s basis
};

// solve the triangularity + normalization axioms for all mu |- n
MacdonaldBasis macdonald_basis(int n);

// checks the two triangularity conditions and the normalization on a table
bool macdonald_axioms_hold(const MacdonaldBasis& mb);

// B_mu = sum of q^{c-1} t^{r-1} over cells (row r, col c)
QTPoly b_mu(const Partition& mu);

// cell monomials of B_mu; prime = true omits the (1,1) cell
std::vector<QTPoly> b_mu_cells(const Partition& mu, bool prime);

enum class OpLabel { e, h };

// Macdonald eigenoperators.  F is e_d or h_d.
SymFunc delta_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb);
SymFunc delta_prime_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb);
SymFunc nabla(const SymFunc& f, const MacdonaldBasis& mb);

SymFunc pi_op(const SymFunc& f, const MacdonaldBasis& mb);
SymFunc pi_inv_op(const SymFunc& f, const MacdonaldBasis& mb);
// Theta_F with F = e_d or h_d; needs the Macdonald basis in degree deg(f) + d
SymFunc theta_op(OpLabel label, int d, const SymFunc& f, const MacdonaldBasis& mb_f,
                 const MacdonaldBasis& mb_out);

// expansion of f in the Macdonald basis (coefficients c_mu with f = sum c_mu H_mu)
std::map<Partition, QTRat, RevLexLess> macdonald_expand(const SymFunc& f,
                                                        const MacdonaldBasis& mb);

// elementary/homogeneous of a finite multiset of q,t-monomials
QTRat multiset_elementary(const std::vector<QTPoly>& vals, int d);
QTRat multiset_homogeneous(const std::vector<QTPoly>& vals, int d);

} // namespace deltacalc
