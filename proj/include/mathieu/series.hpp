#pragma once

#include "mathieu/series/params.hpp"
#include "mathieu/series/routes.hpp"
#include "mathieu/series/series.hpp"
