#pragma once

#include "ptn/canonical.hpp"
#include "ptn/compare.hpp"
#include "ptn/csv.hpp"
#include "ptn/error.hpp"
#include "ptn/feed.hpp"
#include "ptn/geo_export.hpp"
#include "ptn/graph.hpp"
#include "ptn/gtfs.hpp"
#include "ptn/metrics.hpp"
#include "ptn/pajek.hpp"
#include "ptn/report_io.hpp"
#include "ptn/spaces.hpp"
