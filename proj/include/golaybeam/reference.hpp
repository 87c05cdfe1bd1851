// SPDX-License-Identifier: Apache-2.0
//
// Reference 256-element setup: a 16x16 dual-polarized surface at
// half-wavelength spacing whose per-polarization 16x8 configuration
// matrices come from the stacked construction of the two length-8 seed
// pairs.
#ifndef GOLAYBEAM_REFERENCE_HPP
#define GOLAYBEAM_REFERENCE_HPP

#include "golaybeam/catalog.hpp"
#include "golaybeam/construct.hpp"
#include "golaybeam/ris.hpp"

namespace golaybeam {

inline RisGeometry reference_geometry() { return RisGeometry(16, 16, 0.5, 0.5, 1.0); }

inline DualPolConfig reference_config() {
    const auto [u1, w1] = reference_seed_pair_1();
    const auto [u2, w2] = reference_seed_pair_2();
    auto [upsilon_h, upsilon_v] = construct_stacked(u1, w1, u2, w2);
    return DualPolConfig(std::move(upsilon_h), std::move(upsilon_v));
}

inline Direction reference_aoa() { return Direction::from_degrees(-60.0, 60.0); }

} // namespace golaybeam

#endif
