#pragma once

#include "metricgap/bounds.hpp"
#include "metricgap/campaign.hpp"
#include "metricgap/corpus.hpp"
#include "metricgap/distance.hpp"
#include "metricgap/embedding.hpp"
#include "metricgap/examples.hpp"
#include "metricgap/gap_search.hpp"
#include "metricgap/graph.hpp"
#include "metricgap/graph6.hpp"
#include "metricgap/io.hpp"
#include "metricgap/monotonic.hpp"
#include "metricgap/orbits.hpp"
#include "metricgap/rational.hpp"
#include "metricgap/rayleigh.hpp"
#include "metricgap/spectral.hpp"
