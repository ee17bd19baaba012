#pragma once

#include "specpick/sampling.hpp"

namespace specpick::testing {

using namespace specpick::sampling;

}  // namespace specpick::testing
