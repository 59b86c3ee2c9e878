//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "lgm/core.hpp"
#include "lgm/ingest.hpp"
#include "lgm/miner.hpp"
#include "lgm/stats.hpp"
