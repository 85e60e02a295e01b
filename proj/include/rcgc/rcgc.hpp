// SPDX-License-Identifier: MIT
#pragma once

#include "halfint.hpp"
#include "special.hpp"
#include "cgc.hpp"
#include "wigner.hpp"
#include "geometry.hpp"
#include "sphfun.hpp"
#include "integrals.hpp"
#include "oracle.hpp"
#include "rotated_cg.hpp"
