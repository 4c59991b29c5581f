#pragma once

#include "mathieu/specfun/bessel.hpp"
#include "mathieu/specfun/gamma.hpp"
#include "mathieu/specfun/hurwitz_lerch.hpp"
#include "mathieu/specfun/hypergeometric.hpp"
#include "mathieu/specfun/mittag_leffler.hpp"
#include "mathieu/specfun/zeta.hpp"
