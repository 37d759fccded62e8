// Umbrella header.
#pragma once

#include "sarshadow/errors.hpp"
#include "sarshadow/esri_ascii.hpp"
#include "sarshadow/geometry.hpp"
#include "sarshadow/grid.hpp"
#include "sarshadow/incidence.hpp"
#include "sarshadow/pbm.hpp"
#include "sarshadow/png.hpp"
#include "sarshadow/profile.hpp"
#include "sarshadow/render.hpp"
#include "sarshadow/rotate.hpp"
#include "sarshadow/shadow.hpp"
#include "sarshadow/synth.hpp"
