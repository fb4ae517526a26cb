#pragma once

#include "deltacalc/combinat.hpp"
#include "deltacalc/groebner.hpp"
#include "deltacalc/xpoly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace deltacalc {

enum class PMCell : char { zero, one, star };

struct PatternMatrix {
    std::vector<int> word; // in [k]^n
    int k = 0;
    std::vector<std::vector<PMCell>> grid; // k rows, n columns
    int star_count() const;
    std::string ascii() const;
};

PatternMatrix pattern_matrix(const std::vector<int>& w, int k);
int dim_stat(const std::vector<int>& w, int k);

// small finite field GF(q), q a prime power <= 9
class SmallField {
public:
    explicit SmallField(int q);
    int q() const { return q_; }
    int add(int a, int b) const { return add_[a][b]; }
    int sub(int a, int b) const { return add_[a][neg_[b]]; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const;

private:
    int q_;
    std::vector<std::vector<int>> add_, mul_;
    std::vector<int> neg_;
};

// echelon decomposition A = u B t with u in U_k(w), B fitting the pattern of
// w, t diagonal.  ops_matrix is u^{-1}, the accumulated forward row
// operations (the matrix printed in the worked example).
struct EchelonRat {
    std::vector<std::vector<Rat>> u, ops_matrix, b;
    std::vector<Rat> t;
    std::vector<int> word;
};

EchelonRat echelon_decompose(const std::vector<std::vector<Rat>>& a);

struct EchelonFq {
    std::vector<std::vector<int>> u, ops_matrix, b;
    std::vector<int> t;
    std::vector<int> word;
};

EchelonFq echelon_decompose_fq(const SmallField& f, const std::vector<std::vector<int>>& a);

// exhaustive count of spanning n-tuples of lines in F_q^k
Int count_spanning_fq(int n, int k, int q, long budget = 100000000L);
// the closed form q^{C(k,2)} [k]!_q Stir_q(n,k) evaluated at q
Int spanning_formula(int n, int k, int q);

// convexification, Bruhat-minimal sorting permutation, standardization
std::vector<int> conv_word(const std::vector<int>& w);
std::vector<int> sort_perm(const std::vector<int>& w);
std::vector<int> standardize(const std::vector<int>& v, int k);

XPoly schubert_classical(const std::vector<int>& u, OrderKind ord = OrderKind::neglex);
XPoly schubert_fubini(const FubiniWord& w, OrderKind ord = OrderKind::neglex);

// coefficients of f in the Schubert basis of R_{n,k}
std::map<std::vector<int>, Rat> expand_in_schubert(const XPoly& f, int n, int k);

} // namespace deltacalc
