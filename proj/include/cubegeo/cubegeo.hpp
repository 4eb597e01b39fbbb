#pragma once

#include "cubegeo/adjacent3.hpp"
#include "cubegeo/audit.hpp"
#include "cubegeo/candidates.hpp"
#include "cubegeo/export.hpp"
#include "cubegeo/geodesic.hpp"
#include "cubegeo/opposite3.hpp"
#include "cubegeo/oracle.hpp"
#include "cubegeo/sampling.hpp"
#include "cubegeo/simplex.hpp"
#include "cubegeo/surface.hpp"
