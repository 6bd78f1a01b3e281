// Umbrella header.

#ifndef HARMCONV_HARMCONV_HPP
#define HARMCONV_HARMCONV_HPP

#include "series.hpp"
#include "harmonic.hpp"
#include "gallery.hpp"
#include "grid.hpp"
#include "report.hpp"
#include "curve.hpp"
#include "checks.hpp"
#include "theorems.hpp"
#include "io.hpp"
#include "render.hpp"
#include "figures.hpp"

#endif
