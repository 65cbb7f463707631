#pragma once

#include "stdma/baseline.hpp"
#include "stdma/cfls.hpp"
#include "stdma/coloring.hpp"
#include "stdma/core.hpp"
#include "stdma/graph.hpp"
#include "stdma/harness.hpp"
#include "stdma/radio.hpp"
#include "stdma/verifier.hpp"
