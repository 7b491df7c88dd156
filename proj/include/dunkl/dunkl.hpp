#pragma once

#include "diagnostics.hpp"
#include "geometry.hpp"
#include "grid.hpp"
#include "io.hpp"
#include "operators.hpp"
#include "paraproduct.hpp"
#include "probes.hpp"
#include "special.hpp"
#include "transform.hpp"
#include "windows.hpp"
