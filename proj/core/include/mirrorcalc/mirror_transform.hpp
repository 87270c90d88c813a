#pragma once

#include "mirrorcalc/euler_data.hpp"
#include "mirrorcalc/truncated_series.hpp"

namespace mirrorcalc {

// q-series with coefficients in Q(lambda)[alpha, 1/alpha]
using EquivariantSeries = TruncatedSeries<RationalFunction>;

EquivariantSeries equivariant_series(const Universe& u, int order);
// embeds a rational q-series, optionally times alpha^alpha_power
EquivariantSeries lift(const Universe& u, const ScalarQSeries& s, int alpha_power = 0);

// B_d(lambda_i) = Q_d(lambda_i), B_0 = Omega
S0Sequence restrict_to_base(const EulerDataTable& t);

// entry (d, i, r) = Omega(l_i)^-1 * bar(B_r(l_i)) * B_{d-r}(l_i), B_0 = Omega
EulerDataTable lagrange_map(const S0Sequence& b);

// The S_0 data of e^{f/alpha} HG[B](t + g) = HG[B~](t). The g part is applied
// first, then f. Both series need zero constant term and order >= d_max.
S0Sequence mirror_transform_s0(const S0Sequence& b, const EquivariantSeries& f, const EquivariantSeries& g);

}  // namespace mirrorcalc
