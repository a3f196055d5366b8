#pragma once

// Symmetry groups of Julia sets of polynomial skew products on C^2:
// exact computation and classification of maps with infinitely many
// symmetries, fiberwise Green/Bottcher numerics, rendering and numeric
// verification.

#include "skewsym/complex_rational.hpp"
#include "skewsym/rational_turn.hpp"
#include "skewsym/poly1.hpp"
#include "skewsym/skew_poly.hpp"
#include "skewsym/rational_fn.hpp"
#include "skewsym/lattice.hpp"
#include "skewsym/torus_group.hpp"
#include "skewsym/skew_product.hpp"
#include "skewsym/normal_form.hpp"
#include "skewsym/sigma.hpp"
#include "skewsym/conditions.hpp"
#include "skewsym/pipeline.hpp"
#include "skewsym/symmetry_element.hpp"
#include "skewsym/brute_force.hpp"
#include "skewsym/classify.hpp"
#include "skewsym/roots.hpp"
#include "skewsym/green.hpp"
#include "skewsym/sampler.hpp"
#include "skewsym/render.hpp"
#include "skewsym/verify.hpp"
#include "skewsym/parse.hpp"
