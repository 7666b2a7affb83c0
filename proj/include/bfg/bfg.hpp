#pragma once

#include "bipolar.hpp"
#include "classify.hpp"
#include "errors.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "scalar.hpp"
#include "transform.hpp"
#include "verify.hpp"
