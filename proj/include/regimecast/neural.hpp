#pragma once

#include "regimecast/neural/adam.hpp"
#include "regimecast/neural/checkpoint.hpp"
#include "regimecast/neural/common.hpp"
#include "regimecast/neural/gru.hpp"
#include "regimecast/neural/lstm.hpp"
#include "regimecast/neural/tcn.hpp"
#include "regimecast/neural/trainer.hpp"
