#pragma once

#include "deltacalc/symfunc.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace deltacalc {

// Labeled Dyck path.  Rows are numbered 1..n from the bottom; a_i is the
// number of full boxes between the path and the diagonal in row i.
struct LabeledPath {
    std::vector<int> area_vec; // a_1..a_n, a_1 = 0, a_{i+1} <= a_i + 1
    std::vector<int> labels;   // label of row i; strictly increasing up runs

    static LabeledPath from_steps(const std::string& steps, const std::vector<int>& labels);
    std::string steps() const; // N/E step string

    int size() const { return static_cast<int>(area_vec.size()); }
};

struct PathStats {
    long area = 0;
    long dinv = 0;
    std::vector<int> a;
    std::vector<int> d;
    std::set<int> val; // contractible valleys (row indices)
};

PathStats path_stats(const LabeledPath& p);

// monomial table: exponent vector of x_1..x_n -> coefficient
using MonomialTable = std::map<std::vector<int>, QTRat>;

bool table_symmetric(const MonomialTable& t);
// requires symmetry; converts through the m basis into the s basis
SymFunc table_to_symfunc(const MonomialTable& t, int degree);
MonomialTable table_eval(const MonomialTable& t, const std::optional<Rat>& at_q,
                         const std::optional<Rat>& at_t);
MonomialTable table_swap_qt(const MonomialTable& t);

// sum over word parking functions of q^area t^dinv x^P, labels in [max_label]
MonomialTable shuffle_table(int n, int max_label);
SymFunc shuffle_rhs(int n);

// coefficient of z^{n-k} in sum q^dinv t^area prod_{rises}(1 + z/t^{a_i}) x^P
MonomialTable rise_table(int n, int k, int max_label);
SymFunc rise_rhs(int n, int k);

// coefficient of z^{n-k} in sum q^dinv t^area prod_{Val(P)}(1 + z/q^{d_i+1}) x^P
MonomialTable val_table(int n, int k, int max_label);
// converts only if symmetric (throws NotSymmetric otherwise)
SymFunc val_rhs(int n, int k);

// coefficient of the squarefree monomial x_1...x_n in rise_table at t = 0
QTPoly rise_squarefree_t0(int n, int k);

// global worker count for the path enumerations (deterministic output)
void set_jobs(int jobs);
int get_jobs();

} // namespace deltacalc
