#pragma once

#include "sombor/bounds.hpp"
#include "sombor/dpoint_stats.hpp"
#include "sombor/enumerate.hpp"
#include "sombor/error.hpp"
#include "sombor/generate.hpp"
#include "sombor/graph.hpp"
#include "sombor/graph6.hpp"
#include "sombor/indices.hpp"
#include "sombor/io.hpp"
#include "sombor/report.hpp"
