#pragma once

#include "rnaknot/exactcount.hpp"
#include "rnaknot/limitlaw.hpp"
#include "rnaknot/numeric.hpp"
#include "rnaknot/oracle.hpp"
#include "rnaknot/series.hpp"
