#pragma once

// Integer additive set-labeled signed graphs: sumsets, labelings, balance,
// labeled-graph transforms and exhaustive theorem checks.

#include "iasl/balance.hpp"
#include "iasl/enumerate.hpp"
#include "iasl/error.hpp"
#include "iasl/families.hpp"
#include "iasl/graph.hpp"
#include "iasl/integer_set.hpp"
#include "iasl/io.hpp"
#include "iasl/labeling.hpp"
#include "iasl/transforms.hpp"
#include "iasl/verify.hpp"
