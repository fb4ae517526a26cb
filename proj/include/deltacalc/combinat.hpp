#pragma once

#include "deltacalc/qt.hpp"

#include <vector>

namespace deltacalc {

// ordered set partition: blocks listed left to right, elements sorted inside
struct OSP {
    std::vector<std::vector<int>> blocks;
    int n = 0;
    int k = 0;

    static OSP make(std::vector<std::vector<int>> blocks);
    bool operator==(const OSP& o) const { return blocks == o.blocks; }
    std::string str() const;
};

// surjection word [n] ->> [k]
struct FubiniWord {
    std::vector<int> letters;
    int k = 0;

    static FubiniWord make(std::vector<int> letters);
    bool operator==(const FubiniWord& o) const { return letters == o.letters; }
};

using Code = std::vector<int>;

OSP word_to_osp(const FubiniWord& w);
FubiniWord osp_to_word(const OSP& s);

long osp_inv(const OSP& s);
long osp_coinv(const OSP& s);

Code code_of(const OSP& s);
Code code_perm(const std::vector<int>& w);
OSP iota(const Code& c, int n, int k);
std::vector<int> iota_perm(const Code& c);

// skip sequence gamma(S) for S a subset of [n]
Code skip_sequence(const std::vector<int>& S, int n);
bool is_nonskip(const Code& c, int n, int k);
bool is_substaircase(const Code& c, int n, int k);
std::vector<Code> staircases(int n, int k);

// all Fubini words of W_{n,k}, lexicographic
std::vector<FubiniWord> fubini_words(int n, int k);
// all ordered set partitions OP_{n,k}
std::vector<OSP> all_osps(int n, int k);
// E_{n,k}, enumerated by substaircase search
std::vector<Code> substaircase_codes(int n, int k);

QTPoly q_stirling(int n, int k);

// |OP_{n,lambda,s}|: s-block sequences covering [n] with |B_i| >= lambda_i
Int count_osp_nls(int n, const std::vector<int>& lambda, int s);

Int stirling2(int n, int k);
Int factorial(int n);

} // namespace deltacalc
