#pragma once

#include <stdexcept>
#include <string>

namespace hopfwit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HOPFWIT_ERROR_TYPE(NAME)                                               \
    struct NAME : Error {                                                      \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}          \
    }

HOPFWIT_ERROR_TYPE(NonPrimeModulus);
HOPFWIT_ERROR_TYPE(NonMonicMinimalPolynomial);
HOPFWIT_ERROR_TYPE(ZeroDegreeExtension);
HOPFWIT_ERROR_TYPE(DivisionByZero);
HOPFWIT_ERROR_TYPE(FieldMismatch);
HOPFWIT_ERROR_TYPE(ParseError);
HOPFWIT_ERROR_TYPE(DimensionMismatch);
HOPFWIT_ERROR_TYPE(EmptySolutionSet);
HOPFWIT_ERROR_TYPE(InvalidGroupTable);
HOPFWIT_ERROR_TYPE(StructureMismatch);
HOPFWIT_ERROR_TYPE(InvalidDatum);
HOPFWIT_ERROR_TYPE(TNotSubalgebra);
HOPFWIT_ERROR_TYPE(NotAlgebraMap);
HOPFWIT_ERROR_TYPE(WrongTag);
HOPFWIT_ERROR_TYPE(NotAFrobeniusSystem);
HOPFWIT_ERROR_TYPE(InvalidTheta);
HOPFWIT_ERROR_TYPE(NotARetraction);
HOPFWIT_ERROR_TYPE(InseparableMinimalPolynomial);
HOPFWIT_ERROR_TYPE(ReducibleMinimalPolynomial);

#undef HOPFWIT_ERROR_TYPE

} // namespace hopfwit
