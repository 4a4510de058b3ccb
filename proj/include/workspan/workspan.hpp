#pragma once

#include "workspan/amdahl.hpp"
#include "workspan/graph_io.hpp"
#include "workspan/metrics.hpp"
#include "workspan/rational.hpp"
#include "workspan/render.hpp"
#include "workspan/report.hpp"
#include "workspan/scheduler.hpp"
#include "workspan/superlinear.hpp"
#include "workspan/task_graph.hpp"
