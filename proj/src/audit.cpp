#include "ewgeom/audit.hpp"

namespace ewgeom {

std::vector<AuditEntry> conformal_weight_audit(
    const std::vector<TermDescriptor>& terms,
    const std::map<std::string, ScaleDim>& field_dims) {
  std::vector<AuditEntry> out;
  out.reserve(terms.size());
  for (const TermDescriptor& term : terms) {
    ScaleDim total = dim_dimensionless();
    for (const TermFactor& factor : term.factors) {
      const auto found = field_dims.find(factor.field);
      if (found == field_dims.end())
        throw ParseError("no scaling dimension registered for '" + factor.field + "'");
      total = dim_combine(total, dim_power(found->second, factor.power));
    }
    out.push_back({term.label, total, total.is_dimensionless()});
  }
  return out;
}

std::map<std::string, ScaleDim> standard_field_dims() {
  const ScaleDim length = dim_length();
  return {
      {"psi", dim_power(length, Rational(-3, 2))},
      {"phi", dim_power(length, -1)},
      {"m", dim_power(length, -1)},
      {"g", dim_power(length, 2)},
      {"g_inv", dim_power(length, -2)},
      {"eta", dim_power(length, 4)},
      {"theta", length},
      {"theta_inv", dim_power(length, -1)},
      {"det_theta", dim_power(length, 4)},
      {"F", dim_power(length, -2)},
      {"R", dim_dimensionless()},
      {"grav", dim_power(length, 2)},
      {"dY", dim_dimensionless()},
      {"G", dim_dimensionless()},
      {"dG", dim_dimensionless()},
  };
}

std::vector<TermDescriptor> ew_term_descriptors() {
  return {
      // the fiber contraction of a degree-1 form leaves three soldering
      // columns in place of the volume density
      {"fermion-kinetic", {{"theta", 3}, {"psi", 2}}},
      {"scalar-kinetic", {{"g_inv", 1}, {"phi", 2}, {"det_theta", 1}}},
      {"scalar-mass", {{"m", 2}, {"phi", 2}, {"det_theta", 1}}},
      {"scalar-quartic", {{"phi", 4}, {"det_theta", 1}}},
      {"gauge-kinetic", {{"g_inv", 2}, {"R", 2}, {"det_theta", 1}}},
      {"yukawa", {{"psi", 2}, {"phi", 1}, {"det_theta", 1}}},
  };
}

std::vector<TermDescriptor> ecmd_term_descriptors() {
  return {
      {"gravity", {{"theta", 2}, {"R", 1}, {"grav", -1}}},
      {"maxwell-square", {{"F", 2}, {"det_theta", 1}}},
      {"maxwell-cross", {{"theta", 2}, {"dY", 1}, {"F", 1}}},
      {"dirac-kinetic", {{"theta", 3}, {"psi", 2}}},
      {"dirac-mass", {{"m", 1}, {"psi", 2}, {"det_theta", 1}}},
  };
}

TermDescriptor dilaton_term_descriptor() {
  // the length-unit connection is dimensionless, so its two-derivative square
  // needs both metric inverses to balance the volume density
  return {"dilaton-kinetic", {{"g_inv", 2}, {"dG", 2}, {"det_theta", 1}}};
}

}  // namespace ewgeom
