#pragma once

#include "regimecast/pipeline/artifacts.hpp"
#include "regimecast/pipeline/config.hpp"
#include "regimecast/pipeline/run.hpp"
