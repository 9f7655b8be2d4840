#pragma once

#include "esbraid/linalg.hpp"
#include "esbraid/rep.hpp"
#include "esbraid/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace esbraid {

enum class CenterKind { Z2, Z2xZ2, Z4 };
const char* center_kind_name(CenterKind kind);

/// Normal form +-x_1^{a_1} ... x_m^{a_m}: a sign and an exponent bitmask
/// (bit i-1 holds a_i). Unique per group element.
struct ESElement {
    std::uint32_t alpha = 0;
    int sign = 1;

    std::uint32_t key() const { return (alpha << 1) | (sign < 0 ? 1u : 0u); }
    friend bool operator==(const ESElement&, const ESElement&) = default;
};

/// The finite 2-group on generators x_1..x_m with a central -1 of order 2,
/// x_i^2 = nu, adjacent generators anticommuting and distant ones
/// commuting. Order 2^{m+1}. Multiplication merges normal forms; the sign
/// picks up one factor -1 per adjacent-index transposition and one factor
/// nu per squared generator.
class ESGroup {
public:
    ESGroup(int m, int nu);

    int m() const { return m_; }
    int nu() const { return nu_; }
    std::uint64_t order() const { return std::uint64_t{1} << (m_ + 1); }

    ESElement one() const { return {0, 1}; }
    ESElement minus_one() const { return {0, -1}; }
    ESElement generator(int i) const;  // x_i, 1-based
    /// x_1 x_3 x_5 ...; the non-obvious central element for odd m.
    ESElement central_z() const;

    ESElement mul(const ESElement& a, const ESElement& b) const;
    ESElement inverse(const ESElement& a) const;
    int element_order(const ESElement& a) const;

    std::string element_str(const ESElement& e) const;  // "-x1*x3", "1", ...

    /// All 2^{m+1} elements in key order.
    std::vector<ESElement> elements() const;

    /// Elements commuting with every generator, found by direct search.
    std::vector<ESElement> center() const;

    /// Z4 exactly when the order of central_z() is 4 (decided by
    /// multiplication, not by formula); otherwise Z2xZ2. Odd m only.
    CenterKind center_structure() const;

    struct ConjClass {
        ESElement rep;  // smallest key in the class
        std::vector<ESElement> members;
    };
    /// Orbit closure under conjugation by generators; reps in key order.
    /// Capped at m <= 13.
    std::vector<ConjClass> conjugacy_classes() const;

private:
    int m_;
    int nu_;
};

/// The homomorphism into the pure-braid matrix image at n = m+1 strands:
/// x_i -> g_i, -1 -> -identity, on normal forms (dense product).
ExactMatrix phi_matrix(int strands, const ESElement& e);

/// phi on every element in canonical serialized form, in element key order.
/// Walks the exponent-subset tree so only one product path is in memory at
/// a time; strands <= 8.
std::vector<std::pair<ESElement, std::string>> phi_images(int strands);

/// trace(phi_matrix(strands, e)) computed through the tensor factorization
/// of the g_i into single-site 2x2 blocks; O(strands) per element.
Cyclo phi_trace(int strands, const ESElement& e);

struct MatrixGroupEnumeration {
    std::uint64_t order = 0;
    std::vector<std::string> elements;  // canonical serializations, BFS order
};

/// Breadth-first closure of the group generated by `generators` under
/// multiplication. The visited set stores canonical serializations; hash
/// collisions resolve by full string equality. Throws CapExceeded if more
/// than `cap` elements are found.
MatrixGroupEnumeration enumerate_matrix_group(const std::vector<ExactMatrix>& generators,
                                              std::uint64_t cap);

/// Images of the braid group and its pure subgroup under `kind`, with the
/// symmetric-group quotient checked edge by edge during the BFS.
struct BraidImageReport {
    int strands = 0;
    RepKind kind = RepKind::Pi;
    std::uint64_t order_pure = 0;
    bool full_enumerated = false;
    std::uint64_t order_full = 0;
    std::uint64_t quotient_order = 0;
    bool perm_well_defined = false;   // matrix equality forces equal permutations
    std::uint64_t perm_image_size = 0;
    bool kernel_matches_pure = false;  // identity-permutation elements = pure image
    CenterKind pure_center = CenterKind::Z2;
    std::size_t pure_center_order = 0;
    std::size_t pure_class_count = 0;
};

inline constexpr int kMaxStrandsFullEnum = 6;   // |G_n| = n! 2^n grows fast
inline constexpr int kMaxStrandsPureEnum = 10;

/// with_full additionally enumerates the whole braid image and verifies the
/// quotient (allowed for strands <= kMaxStrandsFullEnum); with_structure
/// adds the center and conjugacy-class analysis of the pure image.
BraidImageReport analyze_braid_image(RepKind kind, int strands, bool with_full,
                                     bool with_structure = true);

}  // namespace esbraid
