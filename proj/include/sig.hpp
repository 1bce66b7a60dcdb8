#pragma once

#include "sig/algorithms.hpp"
#include "sig/alphabet_sequence.hpp"
#include "sig/bit_vector.hpp"
#include "sig/circular_arc_graph.hpp"
#include "sig/error.hpp"
#include "sig/int_vector.hpp"
#include "sig/interval_graph.hpp"
#include "sig/kproper_graph.hpp"
#include "sig/point_grid.hpp"
#include "sig/proper_interval_graph.hpp"
#include "sig/range_extremum.hpp"
#include "sig/realization.hpp"
#include "sig/serialize.hpp"
#include "sig/space.hpp"
#include "sig/text_format.hpp"
