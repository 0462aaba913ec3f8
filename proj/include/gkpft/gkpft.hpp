#pragma once

// Umbrella header.

#include "gkpft/cluster_gates.hpp"
#include "gkpft/constants.hpp"
#include "gkpft/erf.hpp"
#include "gkpft/gaussian_core.hpp"
#include "gkpft/magic_distill.hpp"
#include "gkpft/matrix.hpp"
#include "gkpft/noise_model.hpp"
#include "gkpft/output_record.hpp"
#include "gkpft/rational.hpp"
#include "gkpft/rng.hpp"
#include "gkpft/shift_mc.hpp"
#include "gkpft/symbolic_covariance.hpp"
#include "gkpft/symplectic.hpp"
#include "gkpft/threshold.hpp"
#include "gkpft/version.hpp"
