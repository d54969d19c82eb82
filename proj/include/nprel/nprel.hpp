#pragma once

#include "nprel/format.hpp"
#include "nprel/gaussian_tests.hpp"
#include "nprel/metrics.hpp"
#include "nprel/montecarlo.hpp"
#include "nprel/normal.hpp"
#include "nprel/philox.hpp"
#include "nprel/probability.hpp"
#include "nprel/root_finding.hpp"
#include "nprel/sweep.hpp"
#include "nprel/worked_examples.hpp"
