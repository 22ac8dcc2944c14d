#pragma once

#include "edgecone/errors.hpp"
#include "edgecone/rational.hpp"
#include "edgecone/linalg.hpp"
#include "edgecone/graph.hpp"
#include "edgecone/cone.hpp"
#include "edgecone/facets.hpp"
#include "edgecone/lattice.hpp"
#include "edgecone/oracle.hpp"
