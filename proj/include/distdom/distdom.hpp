#pragma once

#include "distdom/bounds.hpp"
#include "distdom/domination.hpp"
#include "distdom/errors.hpp"
#include "distdom/gen.hpp"
#include "distdom/graph.hpp"
#include "distdom/profile.hpp"
#include "distdom/random.hpp"
#include "distdom/report.hpp"
#include "distdom/verify.hpp"
#include "distdom/vertex_set.hpp"
