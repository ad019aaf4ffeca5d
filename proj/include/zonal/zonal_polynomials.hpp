#pragma once

#include <map>

#include "zonal/coefficients.hpp"
#include "zonal/mpoly.hpp"
#include "zonal/partition.hpp"

namespace zonal {

/// The kappa-row of the coefficient table as an element of the monomial
/// symmetric basis: C_kappa = sum_{lambda <= kappa} c_{kappa,lambda} M_lambda.
SymM zonal_polynomial_m(const Partition& kappa, CoeffTable& table);
SymM zonal_polynomial_m(const Partition& kappa);

/// C_kappa realized in m variables; the zero polynomial when kappa has
/// more parts than variables.
MPoly zonal_polynomial(const Partition& kappa, int m, CoeffTable& table);
MPoly zonal_polynomial(const Partition& kappa, int m);

/// Z_kappa = C_kappa / c_{kappa,kappa}, monic in the M_kappa coordinate.
/// Requires len(kappa) <= m.
MPoly z_normalized(const Partition& kappa, int m, CoeffTable& table);
MPoly z_normalized(const Partition& kappa, int m);

enum class ZonalBasis { C, Z };

/// Coordinates of a symmetric homogeneous polynomial over the zonal basis,
/// obtained by back-substitution through the triangular coefficient table.
/// Only nonzero coordinates are returned.
std::map<Partition, Rational, LexGreater> express_in_zonal_basis(const SymM& f, ZonalBasis basis,
                                                                 CoeffTable& table);
std::map<Partition, Rational, LexGreater> express_in_zonal_basis(const SymM& f, ZonalBasis basis);

}  // namespace zonal
