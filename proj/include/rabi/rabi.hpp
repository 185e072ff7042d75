// rabi.hpp: umbrella header.

#pragma once

#include "rabi/state.hpp"
#include "rabi/serialization.hpp"
#include "rabi/model.hpp"
#include "rabi/propagator.hpp"
#include "rabi/wigner.hpp"
#include "rabi/threshold.hpp"
#include "rabi/dyson.hpp"
#include "rabi/explorer.hpp"
