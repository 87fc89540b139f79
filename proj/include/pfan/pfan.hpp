#pragma once

#include "pfan/arrangement.hpp"
#include "pfan/builtin.hpp"
#include "pfan/category.hpp"
#include "pfan/cw_complex.hpp"
#include "pfan/error.hpp"
#include "pfan/fan.hpp"
#include "pfan/fan_poset.hpp"
#include "pfan/io.hpp"
#include "pfan/linalg.hpp"
#include "pfan/partition.hpp"
#include "pfan/picture_group.hpp"
#include "pfan/polyhedral.hpp"
#include "pfan/presentation.hpp"
#include "pfan/render.hpp"
#include "pfan/wall_algebra.hpp"
