#pragma once

#include "qaoalab/csv.hpp"
#include "qaoalab/experiment.hpp"
#include "qaoalab/graph.hpp"
#include "qaoalab/nelder_mead.hpp"
#include "qaoalab/parallel.hpp"
#include "qaoalab/rng.hpp"
#include "qaoalab/simulator.hpp"
#include "qaoalab/strategies.hpp"
