#pragma once

// Umbrella header: token graphs, their connectivity parameters, and the
// constructive machinery for explicit edge-disjoint path families.

#include "binomial.hpp"
#include "certificate_json.hpp"
#include "connectivity.hpp"
#include "family.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "graph_spec.hpp"
#include "lifting.hpp"
#include "max_flow.hpp"
#include "menger.hpp"
#include "token_graph.hpp"
#include "verify.hpp"
