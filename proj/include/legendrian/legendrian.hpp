#pragma once

#include "augmentation.hpp"
#include "cobordism.hpp"
#include "contractible.hpp"
#include "dga.hpp"
#include "disks.hpp"
#include "errors.hpp"
#include "front.hpp"
#include "gf2.hpp"
#include "grid.hpp"
#include "lagrangian.hpp"
#include "simplex.hpp"
#include "spin.hpp"
