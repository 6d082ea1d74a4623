#ifndef SOCLELAB_FAMILIES_HPP
#define SOCLELAB_FAMILIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "soclelab/algebra.hpp"

namespace soclelab {

/// Full matrix algebra M_n with the matrix-unit basis E_rc at index r*n+c
/// and the transpose map as involution.
AlgebraSC::Ptr matrix_algebra(std::size_t n, FieldCtx f);

/// Index of E_rc in the matrix_algebra basis.
inline std::size_t matrix_unit_index(std::size_t n, std::size_t r, std::size_t c) {
  return r * n + c;
}

/// A x B with componentwise operations; the involution is inherited when
/// both factors carry one.
AlgebraSC::Ptr direct_product(const AlgebraSC::Ptr& a, const AlgebraSC::Ptr& b);

/// Group algebra F[G] from a Cayley table: table[g][h] = index of gh.
/// The table is fully validated (identity, associativity, inverses);
/// g -> g^{-1} extends to the standard involution.
AlgebraSC::Ptr group_algebra(const std::vector<std::vector<std::size_t>>& table, FieldCtx f,
                             std::string name = "F[G]");

/// Upper triangular n x n matrices; basis E_rc for r <= c. Not semiprime
/// for n >= 2 — the standard control family. No involution.
AlgebraSC::Ptr upper_triangular_algebra(std::size_t n, FieldCtx f);

/// Index of E_rc (r <= c) in the upper_triangular_algebra basis.
std::size_t triangular_unit_index(std::size_t n, std::size_t r, std::size_t c);

/// Quotient by a two-sided ideal, with the coordinate maps between the
/// algebra and the quotient. Quotient by the full space yields the
/// distinguished zero algebra (projection with zero rows).
struct QuotientAlgebra {
  AlgebraSC::Ptr alg;
  Mat projection;  // quotient_dim x dim: coords in A -> coords in A/I
  Mat section;     // dim x quotient_dim: representative lift
};
QuotientAlgebra quotient_algebra(const AlgebraSC::Ptr& a, const Subspace& two_sided_ideal);

/// Cayley tables of the stock test groups (element 0 is the identity).
std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n);
std::vector<std::vector<std::size_t>> symmetric3_table();
std::vector<std::vector<std::size_t>> dihedral4_table();
std::vector<std::vector<std::size_t>> quaternion_table();
std::vector<std::vector<std::size_t>> klein_four_table();

}  // namespace soclelab

#endif
