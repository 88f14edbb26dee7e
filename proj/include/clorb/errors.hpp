#ifndef CLORB_ERRORS_HPP
#define CLORB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clorb {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CLORB_DEFINE_ERROR(Name)                                       \
    struct Name : Error {                                              \
        explicit Name(const std::string& what = #Name) : Error(what) {}\
    }

CLORB_DEFINE_ERROR(DivNotExact);
CLORB_DEFINE_ERROR(UnboundVariable);
CLORB_DEFINE_ERROR(NegativeCoefficient);
CLORB_DEFINE_ERROR(NonIntegerCoefficient);
CLORB_DEFINE_ERROR(IndexOutOfRange);
CLORB_DEFINE_ERROR(NonLaurentResult);
CLORB_DEFINE_ERROR(NotPolynomial);
CLORB_DEFINE_ERROR(NotHomogeneous);
CLORB_DEFINE_ERROR(NotAnArc);
CLORB_DEFINE_ERROR(NonFinite);
CLORB_DEFINE_ERROR(NoThroughPair);
CLORB_DEFINE_ERROR(AlgebraMismatch);
CLORB_DEFINE_ERROR(SplitUndetected);
CLORB_DEFINE_ERROR(RelationViolated);
CLORB_DEFINE_ERROR(NoSplitting);
CLORB_DEFINE_ERROR(GVectorUndefined);
CLORB_DEFINE_ERROR(NotLocallyFree);
CLORB_DEFINE_ERROR(NonPolynomialResult);
CLORB_DEFINE_ERROR(SizeBound);
CLORB_DEFINE_ERROR(InvalidWord);
CLORB_DEFINE_ERROR(CaseMismatch);
CLORB_DEFINE_ERROR(ParseError);

#undef CLORB_DEFINE_ERROR

}  // namespace clorb

#endif
