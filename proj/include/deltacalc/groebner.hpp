#pragma once

#include "deltacalc/qt.hpp"
#include "deltacalc/xpoly.hpp"

#include <vector>

namespace deltacalc {

struct Ideal {
    int nvars = 0;
    std::vector<XPoly> generators;
};

struct GB {
    int nvars = 0;
    TermOrder order;
    std::vector<XPoly> polys; // reduced: monic, minimal, inter-reduced
};

// unique remainder supported on standard monomials
XPoly normal_form(const XPoly& f, const GB& gb);

// reduced Groebner basis; hints must be known members of the ideal (they are
// appended to the generators before the pair loop and verified structurally by
// the surrounding theory, not here)
GB buchberger(const Ideal& ideal, OrderKind ord, const std::vector<XPoly>& hints = {});

struct Quotient {
    GB gb;
    std::vector<Expo> standard_monomials;
    QTPoly hilbert; // in q
    Int dimension() const { return Int(standard_monomials.size()); }
};

Quotient quotient_basis(const GB& gb);

bool gb_equal(const GB& a, const GB& b);

} // namespace deltacalc
