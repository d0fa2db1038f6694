#pragma once
// Conformal-weight audit: compose the scale dimension of each Lagrangian term
// from the dimensions of its factors and flag any term that fails to balance.

#include <map>
#include <string>
#include <vector>

#include "scales.hpp"

namespace ewgeom {

// one factor of a term: a named field raised to a rational power
struct TermFactor {
  std::string field;
  Rational power;
};

struct TermDescriptor {
  std::string label;
  std::vector<TermFactor> factors;
};

struct AuditEntry {
  std::string label;
  ScaleDim total;
  bool balanced;
};

// composes each term's total dimension from the table; ParseError for a
// factor name missing from the table
std::vector<AuditEntry> conformal_weight_audit(
    const std::vector<TermDescriptor>& terms,
    const std::map<std::string, ScaleDim>& dims);

// the canonical scaling table: psi L^(-3/2), phi and m L^-1, metric L^2 with
// inverse L^-2, soldering form L with inverse L^-1, densities L^4, field
// strength L^-2, gravitational coupling L^2, unit connection and curvature
// inputs dimensionless
std::map<std::string, ScaleDim> standard_field_dims();

// term lists for the two Lagrangians and the unit-connection kinetic term
std::vector<TermDescriptor> ew_term_descriptors();
std::vector<TermDescriptor> ecmd_term_descriptors();
TermDescriptor dilaton_term_descriptor();

}  // namespace ewgeom
