#pragma once

// Umbrella header.

#include "stubcav/characterize.hpp"
#include "stubcav/constants.hpp"
#include "stubcav/device.hpp"
#include "stubcav/errors.hpp"
#include "stubcav/modes.hpp"
#include "stubcav/numerics.hpp"
#include "stubcav/spectroscopy.hpp"
#include "stubcav/squid.hpp"
#include "stubcav/version.hpp"
