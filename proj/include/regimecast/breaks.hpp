#pragma once

#include "regimecast/breaks/bai_perron.hpp"
#include "regimecast/breaks/breakpoint_set.hpp"
#include "regimecast/breaks/combine.hpp"
#include "regimecast/breaks/icss.hpp"
#include "regimecast/breaks/pelt.hpp"
#include "regimecast/breaks/segment_cost.hpp"
