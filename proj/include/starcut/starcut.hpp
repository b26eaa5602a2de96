#pragma once

#include "starcut/cut.hpp"
#include "starcut/generators.hpp"
#include "starcut/graph.hpp"
#include "starcut/io.hpp"
#include "starcut/np_oracles.hpp"
#include "starcut/oracle.hpp"
#include "starcut/reductions.hpp"
#include "starcut/roundtrip.hpp"
#include "starcut/solver.hpp"
