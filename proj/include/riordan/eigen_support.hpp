#pragma once

#include <Eigen/Core>

#include "riordan/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<riordan::Rational> : GenericNumTraits<riordan::Rational> {
    using Real = riordan::Rational;
    using NonInteger = riordan::Rational;
    using Nested = riordan::Rational;
    using Literal = riordan::Rational;

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8
    };

    // Exact arithmetic: there is no rounding to tolerate.
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace riordan {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace riordan
