#pragma once

// Umbrella header: the full workbench.

#include "beikit/bei.hpp"
#include "beikit/fpurity.hpp"
#include "beikit/graph.hpp"
#include "beikit/ideal.hpp"
#include "beikit/knutson.hpp"
#include "beikit/parse.hpp"
#include "beikit/report.hpp"
#include "beikit/verify.hpp"
#include "beikit/version.hpp"
