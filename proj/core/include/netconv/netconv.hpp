#pragma once

// Umbrella header for the netconv library.

#include "netconv/errors.hpp"
#include "netconv/network.hpp"
#include "netconv/oracle.hpp"
#include "netconv/representation.hpp"
#include "netconv/touchstone.hpp"
#include "netconv/transform.hpp"
#include "netconv/types.hpp"
#include "netconv/verification.hpp"
#include "netconv/wave.hpp"
