#pragma once

// Umbrella header. JSON rendering lives separately in flatchain/report.hpp.

#include "flatchain/antichain.hpp"
#include "flatchain/cascade.hpp"
#include "flatchain/errors.hpp"
#include "flatchain/extremal.hpp"
#include "flatchain/fsfa.hpp"
#include "flatchain/numeric.hpp"
#include "flatchain/oracle.hpp"
#include "flatchain/subsets.hpp"
