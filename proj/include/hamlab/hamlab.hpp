#pragma once

#include "hamlab/campaign.hpp"
#include "hamlab/classify.hpp"
#include "hamlab/conditions.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/digraph.hpp"
#include "hamlab/error.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/path_ops.hpp"
#include "hamlab/random.hpp"
#include "hamlab/serialization.hpp"
#include "hamlab/text_format.hpp"
#include "hamlab/vertex_set.hpp"
