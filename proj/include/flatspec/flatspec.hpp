#ifndef FLATSPEC_FLATSPEC_HPP_
#define FLATSPEC_FLATSPEC_HPP_

#include "flatspec/crystal.hpp"
#include "flatspec/error.hpp"
#include "flatspec/families.hpp"
#include "flatspec/ghw_graph.hpp"
#include "flatspec/io.hpp"
#include "flatspec/lattice.hpp"
#include "flatspec/numeric.hpp"
#include "flatspec/signed_permutation.hpp"
#include "flatspec/spectra.hpp"

#endif  // FLATSPEC_FLATSPEC_HPP_
