#pragma once

// Everything at once. Pull in single headers if compile time matters.

#include "biseries.hpp"
#include "circle.hpp"
#include "combinatorics.hpp"
#include "cyclotomic.hpp"
#include "eigenspace.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "group.hpp"
#include "hkr.hpp"
#include "linalg.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "smith.hpp"
#include "wps.hpp"
