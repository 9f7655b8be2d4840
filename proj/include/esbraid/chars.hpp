#pragma once

#include "esbraid/esgroup.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace esbraid {

/// Irreducible representations of the 2-group:
///   OneDim    - the 2^m sign characters (central -1 acts trivially),
///               indexed by a bitmask beta with value (-1)^{beta . alpha};
///   Top       - the unique 2^k-dimensional representation for m = 2k;
///   HalfPlus  - for m = 2k-1, the 2^{k-1}-dimensional representation whose
///               last generator image carries the + sign;
///   HalfMinus - its twin with the opposite sign on the last generator.
/// For nu = +1 every generator image is the nu = -1 image times i.
enum class IrrepKind { OneDim, Top, HalfPlus, HalfMinus };

/// Generator images (index 1..m). Throws std::invalid_argument on parity
/// violations (Top needs even m, Half* odd m).
std::map<int, ExactMatrix> irrep_generator_images(int m, int nu, IrrepKind kind,
                                                  std::uint32_t beta = 0);

/// Image of a normal-form element under the generator map above.
ExactMatrix irrep_image(int m, int nu, IrrepKind kind, const ESElement& e,
                        std::uint32_t beta = 0);

struct CharClass {
    ESElement rep;
    std::size_t size = 0;
};

/// Exact character table. One-dimensional rows are evaluated on demand from
/// beta; the one or two higher-dimensional rows are stored densely, their
/// values computed as traces of the explicit irreducible matrices.
class CharTable {
public:
    static constexpr int kMaxM = 13;

    static CharTable build(int m, int nu);

    int m() const { return m_; }
    int nu() const { return nu_; }
    std::uint64_t group_order() const { return std::uint64_t{1} << (m_ + 1); }

    const std::vector<CharClass>& classes() const { return classes_; }
    std::size_t class_index(const ESElement& e) const;

    struct RowInfo {
        std::string label;
        IrrepKind kind;
        std::uint32_t beta;  // OneDim only
        long dim;
    };
    std::size_t row_count() const { return rows_.size(); }
    const RowInfo& row(std::size_t r) const { return rows_[r]; }

    Cyclo value(std::size_t row, std::size_t cls) const;

    // exact verification of the standard character identities
    bool row_orthogonality_holds() const;
    bool column_orthogonality_holds() const;
    bool dims_square_sum_matches() const;

private:
    int m_ = 0;
    int nu_ = 0;
    std::vector<CharClass> classes_;
    std::vector<RowInfo> rows_;
    std::vector<std::vector<Cyclo>> stored_;      // rows beyond the one-dims
    std::vector<std::size_t> class_of_key_;       // element key -> class index
};

/// Exact multiplicity of each table row in a representation with the given
/// class function (values aligned with table.classes()). Throws
/// std::domain_error if any inner product is not a non-negative integer.
std::vector<long> decompose(const std::vector<Cyclo>& character, const CharTable& table);

/// Restricting the Top representation of the even group (m = 2k) to the
/// subgroup generated by x_1..x_{2k-1} splits it as HalfPlus + HalfMinus;
/// verified exactly on every class.
bool restriction_check(int k);

/// Decomposition of the 2^n-dimensional braid representation restricted to
/// the pure-braid image, via exact character inner products.
struct PiDecomposition {
    int strands = 0;
    int m = 0;
    int nu = -1;
    struct Entry {
        std::string label;
        long dim = 0;
        long multiplicity = 0;
    };
    std::vector<Entry> entries;  // rows with nonzero multiplicity
    std::size_t zero_rows = 0;
    std::uint64_t dim_total = 0;  // sum multiplicity * dim
};
PiDecomposition decompose_pi(int strands);

}  // namespace esbraid
