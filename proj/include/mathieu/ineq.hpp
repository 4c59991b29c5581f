#pragma once

#include "mathieu/ineq/checks.hpp"
#include "mathieu/ineq/suite.hpp"
