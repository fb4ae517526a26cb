#pragma once

#include "deltacalc/rational.hpp"

#include <vector>

namespace deltacalc {

// Partition: weakly decreasing positive parts, no trailing zeros.
using Partition = std::vector<int>;

bool partition_valid(const Partition& p);
int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// dominance: lam >= mu (prefix sums), requires |lam| = |mu|
bool dominates(const Partition& lam, const Partition& mu);
// all partitions of n, in reverse-lexicographic order starting with (n)
std::vector<Partition> partitions_of(int n);
// kappa(lambda) = sum (i-1) * lambda_i
long kappa(const Partition& p);
// multiplicity vector: m[i] = #parts equal to i, i = 1..n
std::vector<int> part_multiplicities(const Partition& p, int n);
// centralizer order z_mu = prod i^{m_i} m_i!
Int z_mu(const Partition& mu);
// a permutation of [n] (one-line, 1-based) with cycle type mu
std::vector<int> cycle_type_representative(const Partition& mu, int n);

// reverse-lexicographic comparator: (n) first, (1^n) last
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

std::string partition_str(const Partition& p);

} // namespace deltacalc
