#pragma once

#include "dendro/cohomology.hpp"
#include "dendro/deformation.hpp"
#include "dendro/dendriform.hpp"
#include "dendro/homotopy.hpp"
#include "dendro/multimap.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace dendro {

using Json = nlohmann::ordered_json;

/// Malformed or shape-inconsistent input; distinct from the domain errors the
/// algebra layer raises so the CLI can map it to the usage exit code.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All rationals travel as strings "p" or "p/q".

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"arity", "dim_in", "dim_out", "components": [per label: out x tuple rows]}
Json multimap_to_json(const MultiMap& f);
MultiMap multimap_from_json(const Json& j);

/// {"dim", "prec", "succ"} with d x d x d nested tensors.
Json algebra_to_json(const DendriformAlgebra& a);
DendriformAlgebra algebra_from_json(const Json& j);

/// {"dim", "mult"}; optionally {"R"} for a Rota-Baxter pair.
Json assoc_to_json(const AssociativeAlgebra& a);
AssociativeAlgebra assoc_from_json(const Json& j);

/// {"dim_a", "dim_m", "theta1_prec", "theta1_succ", "theta2_prec",
///  "theta2_succ"}; theta1 tensors are dim_a x dim_m x dim_m, theta2
/// dim_m x dim_a x dim_m.
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j);

/// {"algebra", "order", "terms": [MultiMap per order 1..N]}
Json deformation_to_json(const TruncatedDeformation& d);
TruncatedDeformation deformation_from_json(const Json& j);

/// {"dims", "arity_bound", "op_degrees", "ops": [{"k", "label", "deg_in",
///  "tensor"}]}. One entry per input-degree tuple with a nonzero block;
/// tensor rows run over the output-degree basis, columns over the input
/// block in row-major tuple order. Absent blocks read back as zero.
Json graded_dend_to_json(const GradedDendSystem& s);
GradedDendSystem graded_dend_from_json(const Json& j);

/// Same layout without "label".
Json graded_ainf_to_json(const GradedAInfSystem& s);
GradedAInfSystem graded_ainf_from_json(const Json& j);

/// {"dim0", "dim1", "d", "mu2_00", "mu2_01", "mu2_10", "mu3"} with nested
/// [label][inputs...][out] tensors.
Json two_term_to_json(const TwoTermDend& t);
TwoTermDend two_term_from_json(const Json& j);

/// {"a", "b", "dt", "rep"}
Json crossed_module_to_json(const CrossedModule& x);
CrossedModule crossed_module_from_json(const Json& j);

/// {"ok", "failures": [{"identity", "basis", "residual"}]}
Json report_to_json(const CheckReport& r);

/// Canonical serialization used for every emitted artifact: 2-space indent
/// plus trailing newline, so byte equality is meaningful.
std::string dump_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace dendro
