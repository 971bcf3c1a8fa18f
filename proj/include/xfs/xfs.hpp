#pragma once

#include "xfs/error.hpp"
#include "xfs/graph.hpp"
#include "xfs/cycle.hpp"
#include "xfs/count.hpp"
#include "xfs/enumerate.hpp"
#include "xfs/efs.hpp"
#include "xfs/profile.hpp"
#include "xfs/verify.hpp"
