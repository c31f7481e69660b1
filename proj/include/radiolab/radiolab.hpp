#pragma once

#include "radiolab/analyze.hpp"
#include "radiolab/budget.hpp"
#include "radiolab/cages.hpp"
#include "radiolab/errors.hpp"
#include "radiolab/families.hpp"
#include "radiolab/field.hpp"
#include "radiolab/graph.hpp"
#include "radiolab/hamsearch.hpp"
#include "radiolab/io.hpp"
#include "radiolab/isomorphism.hpp"
#include "radiolab/oracle.hpp"
#include "radiolab/radio.hpp"
#include "radiolab/singer_labeling.hpp"
