#include "zonal/hypergeometric.hpp"

namespace zonal {

template Rational rising<Rational>(const Rational&, int);
template double rising<double>(const double&, int);
template Rational gen_pochhammer<Rational>(const Rational&, const Partition&);
template double gen_pochhammer<double>(const double&, const Partition&);
template Rational scalar_pfq<Rational>(const PfqSpec<Rational>&, const Rational&);
template double scalar_pfq<double>(const PfqSpec<double>&, const double&);
template Rational matrix_pfq<Rational>(const PfqSpec<Rational>&, const std::vector<Rational>&,
                                       ZonalCache&);
template double matrix_pfq<double>(const PfqSpec<double>&, const std::vector<double>&, ZonalCache&);

}  // namespace zonal
