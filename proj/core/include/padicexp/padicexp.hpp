// Umbrella header; users can include just this.
#pragma once

#include "padicexp/integers.hpp"
#include "padicexp/rational.hpp"
#include "padicexp/normalized.hpp"
#include "padicexp/expansion.hpp"
#include "padicexp/period.hpp"
#include "padicexp/theorem.hpp"
#include "padicexp/scan.hpp"
#include "padicexp/oracle.hpp"
#include "padicexp/render.hpp"
