// SPDX-License-Identifier: Apache-2.0
#ifndef GOLAYBEAM_GOLAYBEAM_HPP
#define GOLAYBEAM_GOLAYBEAM_HPP

#include "golaybeam/array.hpp"
#include "golaybeam/catalog.hpp"
#include "golaybeam/construct.hpp"
#include "golaybeam/errors.hpp"
#include "golaybeam/heatmap.hpp"
#include "golaybeam/io.hpp"
#include "golaybeam/reference.hpp"
#include "golaybeam/ris.hpp"
#include "golaybeam/search.hpp"
#include "golaybeam/sequence.hpp"
#include "golaybeam/sweep.hpp"

#endif
