#pragma once

#include "skewlr/errors.hpp"
#include "skewlr/partition.hpp"
#include "skewlr/skew.hpp"
#include "skewlr/lr.hpp"
#include "skewlr/classify.hpp"
#include "skewlr/harness.hpp"
