#pragma once

#include "ulc/bounds.hpp"
#include "ulc/extremizers.hpp"
#include "ulc/intrinsic_volumes.hpp"
#include "ulc/numerics.hpp"
#include "ulc/pmf.hpp"
