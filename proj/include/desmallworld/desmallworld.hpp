#pragma once

#include "desmallworld/betweenness.hpp"
#include "desmallworld/generators.hpp"
#include "desmallworld/graph.hpp"
#include "desmallworld/greedy.hpp"
#include "desmallworld/harness.hpp"
#include "desmallworld/optimizer.hpp"
#include "desmallworld/oracle.hpp"
#include "desmallworld/path_algebra.hpp"
#include "desmallworld/reachability.hpp"
