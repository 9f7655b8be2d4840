#pragma once

#include "esbraid/braid.hpp"
#include "esbraid/linalg.hpp"
#include "esbraid/report.hpp"

namespace esbraid {

/// The three representation families evaluated by this engine:
///   Pi      - the 2^n-dimensional family generated by r_matrix(),
///   PiPrime - the same with the Temperley-Lieb normalized r_matrix_tl(),
///   Rho1Hat - the irreducible 2^k-dimensional model on odd n = 2k+1,
///             assembled from phase2/rot45/phase4 blocks.
enum class RepKind { Pi, PiPrime, Rho1Hat };

const char* rep_kind_name(RepKind kind);

// size caps: 2^n-dimensional matrices get large quickly
inline constexpr int kMaxStrandsDense = 10;    // Pi / PiPrime
inline constexpr int kMaxStrandsRho1Hat = 17;  // dim 2^((n-1)/2) <= 256

std::size_t rep_dim(RepKind kind, int strands);

/// Image of sigma_index^{sign}. Throws std::out_of_range for bad indices,
/// std::invalid_argument for parity violations (Rho1Hat needs odd strands),
/// CapExceeded above the strand caps. Images are cached per (kind, strands,
/// index, sign); the cache is written once per key and read-only afterwards,
/// so the returned reference stays valid for the process lifetime.
const ExactMatrix& generator_image(RepKind kind, int strands, int index, int sign);

/// Ordered product of generator images, left to right.
ExactMatrix evaluate(RepKind kind, const BraidWord& word);

/// g_i: the image of sigma_i^2 under Pi.
ExactMatrix pure_generator(int strands, int index);

/// The change of basis that diagonalizes the odd-indexed g_i while fixing
/// the even-indexed ones: alternating rot90/pauli_x diagonalizers per site,
/// padded with identity on a trailing odd site.
ExactMatrix basis_change(int strands);

/// (r x I)(I x r)(r x I) = (I x r)(r x I)(I x r) for a 4x4 r, exactly.
bool yang_baxter_holds(const ExactMatrix& r);

/// The eleven matrix identities (a)-(k) the whole construction rests on,
/// checked exactly at the given strand count. Clauses that need more sites
/// than available are reported as skipped.
CheckReport verify_lemma22(int strands);

/// Braid relations (far commutation and the Yang-Baxter relation on
/// adjacent generators) for every generator image of `kind`, exactly,
/// for all strand counts up to and including max_strands.
CheckReport verify_braid_relations(RepKind kind, int max_strands);

}  // namespace esbraid
