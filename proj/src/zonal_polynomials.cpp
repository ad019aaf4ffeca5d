#include "zonal/zonal_polynomials.hpp"

#include <stdexcept>

namespace zonal {

SymM zonal_polynomial_m(const Partition& kappa, CoeffTable& table) {
    const int i = table.index_of(kappa);
    SymM out;
    const auto& parts = table.partitions();
    for (int j = i; j < static_cast<int>(parts.size()); ++j) {
        const Rational& c = table.at(i, j);
        if (c != 0) out.add_term(parts[static_cast<std::size_t>(j)], c);
    }
    return out;
}

SymM zonal_polynomial_m(const Partition& kappa) {
    CoeffTable table(kappa.weight());
    return zonal_polynomial_m(kappa, table);
}

MPoly zonal_polynomial(const Partition& kappa, int m, CoeffTable& table) {
    if (m < 1) throw std::invalid_argument("zonal_polynomial requires m >= 1");
    if (kappa.length() > m) return MPoly(m);
    return zonal_polynomial_m(kappa, table).expand(m);
}

MPoly zonal_polynomial(const Partition& kappa, int m) {
    CoeffTable table(kappa.weight());
    return zonal_polynomial(kappa, m, table);
}

MPoly z_normalized(const Partition& kappa, int m, CoeffTable& table) {
    if (kappa.length() > m)
        throw std::invalid_argument("z_normalized requires at least len(kappa) variables");
    const int i = table.index_of(kappa);
    const Rational& diagonal = table.at(i, i);
    return zonal_polynomial(kappa, m, table) * (Rational(1) / diagonal);
}

MPoly z_normalized(const Partition& kappa, int m) {
    CoeffTable table(kappa.weight());
    return z_normalized(kappa, m, table);
}

std::map<Partition, Rational, LexGreater> express_in_zonal_basis(const SymM& f, ZonalBasis basis,
                                                                 CoeffTable& table) {
    std::map<Partition, Rational, LexGreater> out;
    if (f.is_zero()) return out;
    if (f.weight() != table.weight())
        throw std::invalid_argument("weight mismatch between polynomial and table");
    const auto& parts = table.partitions();
    const int count = static_cast<int>(parts.size());
    std::vector<Rational> coords(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j) {
        Rational residual = f.coefficient(parts[static_cast<std::size_t>(j)]);
        for (int i = 0; i < j; ++i) {
            if (coords[static_cast<std::size_t>(i)] == 0) continue;
            const Rational& c = table.at(i, j);
            if (c == 0) continue;
            if (basis == ZonalBasis::C) {
                residual -= coords[static_cast<std::size_t>(i)] * c;
            } else {
                residual -= coords[static_cast<std::size_t>(i)] * c / table.at(i, i);
            }
        }
        // The diagonal is never zero for a valid partition.
        if (basis == ZonalBasis::C) residual /= table.at(j, j);
        coords[static_cast<std::size_t>(j)] = std::move(residual);
    }
    for (int j = 0; j < count; ++j) {
        if (coords[static_cast<std::size_t>(j)] != 0)
            out.emplace(parts[static_cast<std::size_t>(j)], std::move(coords[static_cast<std::size_t>(j)]));
    }
    return out;
}

std::map<Partition, Rational, LexGreater> express_in_zonal_basis(const SymM& f, ZonalBasis basis) {
    if (f.is_zero()) return {};
    CoeffTable table(f.weight());
    return express_in_zonal_basis(f, basis, table);
}

}  // namespace zonal
