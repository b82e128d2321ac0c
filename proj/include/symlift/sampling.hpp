#pragma once

#include <cstdint>
#include <random>

#include "symlift/intalg.hpp"
#include "symlift/perm.hpp"
#include "symlift/vspace.hpp"

namespace symlift::sampling {

// Seeded generators for the randomized property suites. Everything is
// deterministic given the engine state.

using Rng = std::mt19937_64;

std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi);  // inclusive

/// Finitary permutation with support inside [0, carrier).
perm::FinPerm random_finperm(Rng& rng, std::uint64_t carrier,
                             std::uint64_t max_support);
/// Finitary involution with at least min_pairs transpositions.
perm::FinPerm random_involution(Rng& rng, std::uint64_t carrier,
                                std::uint64_t min_pairs, std::uint64_t max_pairs);

/// Expression over the registry's atom vocabulary plus single-cycle
/// literals, depth-bounded.
perm::ExprPtr random_expr(Rng& rng, const perm::AtomRegistry& atoms, int depth);

/// Expression built only from cycle literals supported inside the window,
/// so every window point stays inside it.
perm::ExprPtr random_window_expr(Rng& rng, std::uint64_t window, int depth);

intalg::BElem random_belem(Rng& rng);

vspace::Vector random_vector(Rng& rng, const vspace::Field& f,
                             std::size_t max_index);
vspace::Subspace random_subspace(Rng& rng, const vspace::Field& f,
                                 std::size_t max_dim, std::size_t max_index);

}  // namespace symlift::sampling
