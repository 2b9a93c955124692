#pragma once

// Umbrella header for the whole library.

#include <hodge/errors.hpp>
#include <hodge/hodge_vector.hpp>
#include <hodge/diamond.hpp>
#include <hodge/enumerate.hpp>
#include <hodge/diamond_class.hpp>
#include <hodge/degeneration.hpp>
#include <hodge/profiles.hpp>
#include <hodge/relation_graph.hpp>
#include <hodge/saturation.hpp>
#include <hodge/weight2.hpp>
#include <hodge/weight3.hpp>
#include <hodge/cy.hpp>
#include <hodge/geometry.hpp>
#include <hodge/json_io.hpp>
