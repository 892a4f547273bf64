#pragma once

#include "gpoly/corpus.hpp"
#include "gpoly/deck_json.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/graph.hpp"
#include "gpoly/graph_polys.hpp"
#include "gpoly/identities.hpp"
#include "gpoly/matrix.hpp"
#include "gpoly/poly.hpp"
#include "gpoly/rational.hpp"
#include "gpoly/reconstruct.hpp"
