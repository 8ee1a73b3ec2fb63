#pragma once

#include "tightsurf/error.hpp"
#include "tightsurf/exact.hpp"
#include "tightsurf/hull.hpp"
#include "tightsurf/graph.hpp"
#include "tightsurf/complex.hpp"
#include "tightsurf/chromatic.hpp"
#include "tightsurf/tightness.hpp"
#include "tightsurf/constructions.hpp"
#include "tightsurf/catalog.hpp"
#include "tightsurf/io.hpp"
#include "tightsurf/report.hpp"
