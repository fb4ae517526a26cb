#pragma once

#include <stdexcept>
#include <string>

namespace deltacalc {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define DELTACALC_ERROR(Name)                        \
    struct Name : error {                            \
        explicit Name(const std::string& msg = #Name) : error(msg) {} \
    }

DELTACALC_ERROR(ZeroDenominator);
DELTACALC_ERROR(PoleAtPoint);
DELTACALC_ERROR(NotUnivariate);
DELTACALC_ERROR(DegreeExceeded);
DELTACALC_ERROR(UnsupportedBasis);
DELTACALC_ERROR(DegreeMismatch);
DELTACALC_ERROR(NonIntegralMultiplicity);
DELTACALC_ERROR(NotPartitionContent);
DELTACALC_ERROR(SingularSystem);
DELTACALC_ERROR(NotSubstaircase);
DELTACALC_ERROR(NotSymmetric);
DELTACALC_ERROR(LengthMismatch);
DELTACALC_ERROR(DivisionFailure);
DELTACALC_ERROR(BadParams);
DELTACALC_ERROR(NotZeroDimensional);
DELTACALC_ERROR(NotEquivariant);
DELTACALC_ERROR(NotPolynomial);
DELTACALC_ERROR(DuplicatePoints);
DELTACALC_ERROR(ZeroColumn);
DELTACALC_ERROR(BudgetExceeded);
DELTACALC_ERROR(NotConvex);
DELTACALC_ERROR(SingularBasis);

#undef DELTACALC_ERROR

} // namespace deltacalc
