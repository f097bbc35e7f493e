#pragma once

#include "regimecast/breaks.hpp"
#include "regimecast/date.hpp"
#include "regimecast/error.hpp"
#include "regimecast/eval.hpp"
#include "regimecast/ingest.hpp"
#include "regimecast/neural.hpp"
#include "regimecast/pipeline.hpp"
#include "regimecast/tensor.hpp"
#include "regimecast/wavelet.hpp"
