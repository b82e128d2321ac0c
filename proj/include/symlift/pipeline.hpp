#pragma once

#include <cstdint>

#include "symlift/coding_ce.hpp"
#include "symlift/intalg.hpp"
#include "symlift/vspace.hpp"

namespace symlift::pipeline {

/// End-to-end decode through the lifted representations: the coding
/// generators are built, lifted once, and everything after that uses only
/// group operations and identity tests of the target structure. Each
/// decoder returns "n was enumerated by the horizon".

/// Lift through basis-permuting semilinear maps; the membership test is
/// non-equivalence of the lifted commutators to the identity modulo
/// scalars, checked on the window's basis vectors.
bool decode_via_gsl(std::uint64_t n, const ce::ColumnSchemeZ& s,
                    const ce::Enumerator& e, perm::Window w,
                    const vspace::Field& field);

/// Lift through the induced interval-algebra automorphisms; the membership
/// test asks whether either lifted commutator moves any unit block over
/// the probed column-0 points.
bool decode_via_ba(std::uint64_t n, const ce::ColumnSchemeZ& s,
                   const ce::Enumerator& e, perm::Window w);

}  // namespace symlift::pipeline
