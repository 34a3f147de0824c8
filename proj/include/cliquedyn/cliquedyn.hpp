#pragma once

// Umbrella header. JSON helpers live in cliquedyn/io.hpp and need json.hpp.

#include "cliquedyn/graph.hpp"
#include "cliquedyn/group_action.hpp"
#include "cliquedyn/parallel.hpp"
#include "cliquedyn/covering.hpp"
#include "cliquedyn/cliques.hpp"
#include "cliquedyn/walks.hpp"
#include "cliquedyn/development.hpp"
#include "cliquedyn/hexgeo.hpp"
#include "cliquedyn/trishapes.hpp"
#include "cliquedyn/isomorphism.hpp"
#include "cliquedyn/explicit_c.hpp"
#include "cliquedyn/structure.hpp"
