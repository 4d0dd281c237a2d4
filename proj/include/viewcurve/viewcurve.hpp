#pragma once

#include "viewcurve/errors.hpp"
#include "viewcurve/expr.hpp"
#include "viewcurve/invariants.hpp"
#include "viewcurve/jet.hpp"
#include "viewcurve/projection.hpp"
#include "viewcurve/render.hpp"
#include "viewcurve/surface.hpp"
#include "viewcurve/verify.hpp"
