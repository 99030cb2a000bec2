#pragma once

#include "sachs/coefficients.hpp"
#include "sachs/compression.hpp"
#include "sachs/difference_graph.hpp"
#include "sachs/errors.hpp"
#include "sachs/extremal_search.hpp"
#include "sachs/fuzz.hpp"
#include "sachs/graph.hpp"
#include "sachs/partition.hpp"
#include "sachs/report.hpp"
