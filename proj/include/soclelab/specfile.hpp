#ifndef SOCLELAB_SPECFILE_HPP
#define SOCLELAB_SPECFILE_HPP

#include <map>
#include <string>

#include "soclelab/algebra.hpp"
#include "soclelab/barnes.hpp"
#include "soclelab/poly.hpp"

namespace soclelab {

/// A parsed spec file: either a structure-constant algebra with named
/// elements, or one of the two infinite-dimensional models with named
/// elements of its own kind. All scalars travel as strings ("3/2", "5") so
/// nothing ever rounds.
struct SpecFile {
  enum class Model { FinDim, Barnes, Poly };

  Model model = Model::FinDim;
  FieldCtx field;
  std::string name;

  AlgebraSC::Ptr algebra;                           // FinDim
  std::map<std::string, Vec> elements;              // FinDim
  std::map<std::string, BarnesElement> barnes_elements;
  std::map<std::string, Poly> poly_elements;
};

/// "QQ" or "GF(p)".
FieldCtx parse_field(const std::string& text);

/// Parses (and, for findim, fully validates) a spec. Structural problems
/// raise InvalidSpec with a positioned message; algebra-law violations
/// raise their own error codes with witness indices.
SpecFile parse_spec_text(const std::string& text, const std::string& origin = "<string>");
SpecFile load_spec(const std::string& path);

/// Element lookup: a name from the spec's map, or an inline literal —
/// a JSON coordinate array for findim, a {"lambda", "block"} object for
/// barnes, a polynomial string for poly.
Vec resolve_findim_element(const SpecFile& spec, const std::string& ref);
BarnesElement resolve_barnes_element(const SpecFile& spec, const std::string& ref);
Poly resolve_poly_element(const SpecFile& spec, const std::string& ref);

/// Deterministic spec emitters for the stock families; output parses back
/// to the same algebra. Matrix specs name the units E11..Enn, group specs
/// name the basis g0..g{k}, and every spec names "one" and "zero".
std::string spec_for_matrix(std::size_t n, FieldCtx f);
std::string spec_for_product(std::size_t n, std::size_t m, FieldCtx f);
std::string spec_for_group(const std::string& group, FieldCtx f);
std::string spec_for_triangular(std::size_t n, FieldCtx f);

}  // namespace soclelab

#endif
