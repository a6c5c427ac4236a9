#pragma once

#include "acceptance.hpp"
#include "combinatorics.hpp"
#include "exact.hpp"
#include "genw.hpp"
#include "highprec.hpp"
#include "io.hpp"
#include "lambert_w.hpp"
#include "oracle.hpp"
#include "rlambert.hpp"
#include "series.hpp"
