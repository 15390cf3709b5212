#pragma once

#include "nckit/arith.hpp"
#include "nckit/dual_braid.hpp"
#include "nckit/error.hpp"
#include "nckit/free_cumulants.hpp"
#include "nckit/garside_count.hpp"
#include "nckit/linalg.hpp"
#include "nckit/nc_lattice.hpp"
#include "nckit/partition_families.hpp"
#include "nckit/set_partition.hpp"
