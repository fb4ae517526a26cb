#pragma once

#include "deltacalc/partition.hpp"

#include <vector>

namespace deltacalc {

// tableau as a list of rows
using Tableau = std::vector<std::vector<int>>;

// all semistandard tableaux of the given shape and content
std::vector<Tableau> ssyt_enumerate(const Partition& shape, const Partition& content);

// all standard tableaux of the given shape
std::vector<Tableau> syt_enumerate(const Partition& shape);

// reading word: rows left to right, bottom row first
std::vector<int> reading_word(const Tableau& t);

// descents of a standard tableau: i such that i+1 lies in a strictly lower row
int syt_des(const Tableau& t);
long syt_maj(const Tableau& t);

bool is_ssyt(const Tableau& t);
bool is_syt(const Tableau& t);

} // namespace deltacalc
