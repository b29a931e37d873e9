#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace titszeta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy. Every throwing operation names one of these.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TITSZETA_ERROR(Name)                                              \
    struct Name : Error {                                                 \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

TITSZETA_ERROR(NotPrimePower);
TITSZETA_ERROR(CapExceeded);
TITSZETA_ERROR(DivisionByZero);
TITSZETA_ERROR(ZeroSpace);
TITSZETA_ERROR(AmbientMismatch);
TITSZETA_ERROR(BadDimension);
TITSZETA_ERROR(BadMultiDimension);
TITSZETA_ERROR(TooLargeForExact);
TITSZETA_ERROR(NotCyclicPartite);
TITSZETA_ERROR(ScaleCap);
TITSZETA_ERROR(BadShape);
TITSZETA_ERROR(BadParity);
TITSZETA_ERROR(SpecialCaseRequired);
TITSZETA_ERROR(MixedParameters);
TITSZETA_ERROR(VerificationFailed);
TITSZETA_ERROR(ExpansionNotIntegral);
TITSZETA_ERROR(SizeMismatch);

#undef TITSZETA_ERROR

inline Int int_pow(Int base, uint64_t e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace titszeta
