#pragma once
// Typed error conditions shared across the library.  Every throw site uses one
// of these so tests can assert on the precise failure mode.

#include <stdexcept>
#include <string>

namespace ewgeom {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EWGEOM_DEFINE_ERROR(Name)                                              \
  struct Name : Error {                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

EWGEOM_DEFINE_ERROR(ParseError);            // malformed literal / JSON field
EWGEOM_DEFINE_ERROR(DimensionMismatch);     // adding quantities of unequal scale dimension
EWGEOM_DEFINE_ERROR(ShapeMismatch);         // tensor/matrix extents disagree
EWGEOM_DEFINE_ERROR(IllegalContraction);    // index kinds cannot be paired
EWGEOM_DEFINE_ERROR(SignatureError);        // tensor slots do not match the required pattern
EWGEOM_DEFINE_ERROR(NotHermitian);          // Hermitian input expected
EWGEOM_DEFINE_ERROR(DegenerateMetric);      // metric has a null direction where forbidden
EWGEOM_DEFINE_ERROR(NonInvertible);         // singular matrix / frame
EWGEOM_DEFINE_ERROR(NotTimelike);           // observer fails the timelike/future test
EWGEOM_DEFINE_ERROR(MasslessShell);         // mass-shell projector needs m != 0
EWGEOM_DEFINE_ERROR(OffShell);              // momentum does not satisfy the shell relation
EWGEOM_DEFINE_ERROR(ChartMismatch);         // polynomial/form operands live on different charts
EWGEOM_DEFINE_ERROR(DegreeMismatch);        // form degree out of range for the operation
EWGEOM_DEFINE_ERROR(NonConstantDeterminant);// gauge frame change must have constant det
EWGEOM_DEFINE_ERROR(DependentGenerators);   // orthonormalization met a null combination
EWGEOM_DEFINE_ERROR(NotClosed);             // bracket leaves the span of the generators
EWGEOM_DEFINE_ERROR(NotRepresentable);      // exact result leaves the coefficient ring
EWGEOM_DEFINE_ERROR(ZeroCharge);            // coupling constant must be nonzero
EWGEOM_DEFINE_ERROR(SingularTetrad);        // soldering form must be invertible here
EWGEOM_DEFINE_ERROR(ZeroHiggs);             // polar decomposition needs a nonzero field
EWGEOM_DEFINE_ERROR(BadAngle);              // mixing angle outside the open interval (0, pi/2)
EWGEOM_DEFINE_ERROR(OmegaPowerMismatch);    // fermion/scalar volume-factor tags do not cancel
EWGEOM_DEFINE_ERROR(NonOrthonormalFrame);   // frame fails its metric normalization
EWGEOM_DEFINE_ERROR(SchemaError);           // scenario/report JSON violates the schema
EWGEOM_DEFINE_ERROR(UnknownSuite);          // verification suite name not registered
EWGEOM_DEFINE_ERROR(UnknownKind);           // dump table name not registered
EWGEOM_DEFINE_ERROR(CheckFailure);          // a requested check evaluated false

#undef EWGEOM_DEFINE_ERROR

}  // namespace ewgeom
