#pragma once

#include "saito/lgclassical.hpp"
#include "unipoly.hpp"

namespace saito {

uni::QPoly critical_poly(const StratumConfigA& cfg, const QVec& xi_full);
uni::QPoly critical_poly(const StratumConfigBD& cfg, const QVec& xi);
QVec full_xi(const StratumConfigA& cfg, const QVec& xi);

}  // namespace saito
