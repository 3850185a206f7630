#pragma once

// Umbrella header for the two-qubit entanglement-fluctuation library.

#include "qef/errors.hpp"
#include "qef/figures.hpp"
#include "qef/linalg.hpp"
#include "qef/measures.hpp"
#include "qef/mixed_state.hpp"
#include "qef/pure_state.hpp"
#include "qef/rho_io.hpp"
#include "qef/roots.hpp"
#include "qef/thermal.hpp"
