#pragma once

#include "saito/saitosym.hpp"

namespace saito::detail {

std::vector<std::vector<int>> weighted_exponents(const std::vector<int>& w, int total);
MultiPoly monomial(int nvars, const std::vector<int>& e, const std::vector<int>& w);

// linear images of the stratum parametrization in the chart variables
std::vector<MultiPoly> stratum_chart_images(const Stratum& D);

}  // namespace saito::detail
