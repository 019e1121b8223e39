#pragma once

// Umbrella header.

#include "quiverset/io.hpp"
#include "quiverset/local.hpp"
#include "quiverset/oracle.hpp"
#include "quiverset/quiver.hpp"
#include "quiverset/semigroup.hpp"
#include "quiverset/simple.hpp"
