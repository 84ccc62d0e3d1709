#pragma once

// Umbrella header for the connected coalition number library.

#include "ccn/canonical.hpp"
#include "ccn/closed_forms.hpp"
#include "ccn/coalition.hpp"
#include "ccn/connectivity.hpp"
#include "ccn/domination.hpp"
#include "ccn/errors.hpp"
#include "ccn/generators.hpp"
#include "ccn/graph.hpp"
#include "ccn/graph6.hpp"
#include "ccn/oracle.hpp"
#include "ccn/partition.hpp"
#include "ccn/results.hpp"
#include "ccn/sweeps.hpp"
#include "ccn/vertex_set.hpp"
