#include "esbraid/chars.hpp"

#include <bit>
#include <stdexcept>

namespace esbraid {

namespace {

std::string beta_bits(int m, std::uint32_t beta) {
    std::string out;
    for (int i = 1; i <= m; ++i)
        out += (beta & (std::uint32_t{1} << (i - 1))) ? '1' : '0';
    return out;
}

int one_dim_sign(std::uint32_t beta, std::uint32_t alpha) {
    return (std::popcount(beta & alpha) & 1) ? -1 : 1;
}

// Traces of the sorted generator products over every exponent mask below
// 2^m. Walks the subset tree where a child extends its parent by a smaller
// index, so each mask costs one left-multiplication and only the current
// path is alive.
void subset_trace_walk(const std::map<int, ExactMatrix>& images, int m,
                       std::uint32_t mask, const ExactMatrix& mat,
                       std::vector<Cyclo>& traces) {
    traces[mask] = mat.trace();
    const int lowest = mask ? std::countr_zero(mask) + 1 : m + 1;
    for (int b = 1; b < lowest; ++b)
        subset_trace_walk(images, m, mask | (std::uint32_t{1} << (b - 1)),
                          images.at(b) * mat, traces);
}

std::vector<Cyclo> subset_traces(const std::map<int, ExactMatrix>& images, int m) {
    std::vector<Cyclo> traces(std::size_t{1} << m);
    subset_trace_walk(images, m, 0, ExactMatrix::identity(images.at(1).dim()), traces);
    return traces;
}

}  // namespace

std::map<int, ExactMatrix> irrep_generator_images(int m, int nu, IrrepKind kind,
                                                  std::uint32_t beta) {
    if (nu != 1 && nu != -1) throw std::invalid_argument("irrep: nu must be +1 or -1");
    std::map<int, ExactMatrix> images;
    if (kind == IrrepKind::OneDim) {
        for (int i = 1; i <= m; ++i) {
            ExactMatrix v(1);
            v.at(0, 0) = one_dim_sign(beta, std::uint32_t{1} << (i - 1));
            images.emplace(i, v);
        }
        return images;
    }

    const Cyclo iu = Cyclo::imag_unit();
    if (kind == IrrepKind::Top) {
        if (m % 2 != 0) throw std::invalid_argument("Top irrep needs even m");
        const int k = m / 2;
        for (int i = 1; i <= m; ++i) {
            ExactMatrix g(1);
            if (i == 1) {
                g = site_operator(k, 1, pauli_z()).scaled(iu);
            } else if (i % 2 == 0) {
                g = site_operator(k, i / 2, rot90());
            } else {
                g = site_operator(k, (i - 1) / 2, kron(pauli_z(), pauli_z())).scaled(iu);
            }
            images.emplace(i, std::move(g));
        }
    } else {
        if (m % 2 != 1) throw std::invalid_argument("Half irreps need odd m");
        const int k = (m + 1) / 2;
        const int sites = k - 1;  // dimension 2^{k-1}
        for (int i = 1; i <= m; ++i) {
            ExactMatrix g(1);
            if (i == m) {
                // only the last generator distinguishes the two halves
                if (sites == 0) {
                    g = ExactMatrix(1);
                    g.at(0, 0) = iu;
                } else {
                    g = site_operator(sites, sites, pauli_z()).scaled(iu);
                }
                if (kind == IrrepKind::HalfMinus) g = -g;
            } else if (i == 1) {
                g = site_operator(sites, 1, pauli_z()).scaled(iu);
            } else if (i % 2 == 0) {
                g = site_operator(sites, i / 2, rot90());
            } else {
                g = site_operator(sites, (i - 1) / 2, kron(pauli_z(), pauli_z())).scaled(iu);
            }
            images.emplace(i, std::move(g));
        }
    }
    if (nu == 1) {
        for (auto& [i, g] : images) g = g.scaled(iu);
    }
    return images;
}

ExactMatrix irrep_image(int m, int nu, IrrepKind kind, const ESElement& e,
                        std::uint32_t beta) {
    const auto images = irrep_generator_images(m, nu, kind, beta);
    ExactMatrix out = ExactMatrix::identity(images.at(1).dim());
    for (int i = 1; i <= m; ++i)
        if (e.alpha & (std::uint32_t{1} << (i - 1))) out = out * images.at(i);
    // the central -1 acts as -identity on the higher-dimensional models and
    // trivially on the sign characters
    if (e.sign < 0 && kind != IrrepKind::OneDim) out = -out;
    return out;
}

CharTable CharTable::build(int m, int nu) {
    if (m < 1 || m > kMaxM) throw CapExceeded("CharTable: m cap exceeded");
    CharTable t;
    t.m_ = m;
    t.nu_ = nu;

    const ESGroup group(m, nu);
    const auto classes = group.conjugacy_classes();
    t.class_of_key_.assign(std::size_t{1} << (m + 1), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        t.classes_.push_back({classes[c].rep, classes[c].members.size()});
        for (const ESElement& e : classes[c].members) t.class_of_key_[e.key()] = c;
    }

    for (std::uint32_t beta = 0; beta < (std::uint32_t{1} << m); ++beta)
        t.rows_.push_back({"lin:" + beta_bits(m, beta), IrrepKind::OneDim, beta, 1});

    const auto add_stored = [&](IrrepKind kind, const std::string& label) {
        const auto images = irrep_generator_images(m, nu, kind);
        const std::vector<Cyclo> traces = subset_traces(images, m);
        std::vector<Cyclo> values;
        values.reserve(t.classes_.size());
        for (const CharClass& cls : t.classes_) {
            Cyclo tr = traces[cls.rep.alpha];
            if (cls.rep.sign < 0) tr = -tr;
            values.push_back(std::move(tr));
        }
        t.rows_.push_back({label, kind, 0, static_cast<long>(images.at(1).dim())});
        t.stored_.push_back(std::move(values));
    };

    if (m % 2 == 0) {
        add_stored(IrrepKind::Top, "top");
    } else {
        add_stored(IrrepKind::HalfPlus, "half+");
        add_stored(IrrepKind::HalfMinus, "half-");
    }
    return t;
}

std::size_t CharTable::class_index(const ESElement& e) const {
    return class_of_key_[e.key()];
}

Cyclo CharTable::value(std::size_t row, std::size_t cls) const {
    const RowInfo& info = rows_[row];
    if (info.kind == IrrepKind::OneDim)
        return Cyclo(one_dim_sign(info.beta, classes_[cls].rep.alpha));
    const std::size_t one_dims = std::size_t{1} << m_;
    return stored_[row - one_dims][cls];
}

bool CharTable::row_orthogonality_holds() const {
    const std::size_t one_dims = std::size_t{1} << m_;
    const long long order = static_cast<long long>(group_order());

    // one-dim x one-dim inner products stay rational integers; accumulate
    // them exactly in machine words (|sum| <= |G| <= 2^14)
    for (std::size_t r1 = 0; r1 < one_dims; ++r1) {
        for (std::size_t r2 = r1; r2 < one_dims; ++r2) {
            long long sum = 0;
            const std::uint32_t beta = rows_[r1].beta ^ rows_[r2].beta;
            for (const CharClass& cls : classes_) {
                const long long term =
                    static_cast<long long>(cls.size) * one_dim_sign(beta, cls.rep.alpha);
                sum += term;
            }
            if (sum != (r1 == r2 ? order : 0)) return false;
        }
    }
    // pairs involving a stored row
    for (std::size_t r1 = 0; r1 < rows_.size(); ++r1) {
        for (std::size_t r2 = (r1 < one_dims ? one_dims : r1); r2 < rows_.size(); ++r2) {
            Cyclo sum;
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                const Cyclo term = value(r1, c) * value(r2, c).conj();
                if (!term.is_zero()) sum += term * Cyclo(static_cast<long>(classes_[c].size));
            }
            if (sum != Cyclo(r1 == r2 ? static_cast<long>(order) : 0)) return false;
        }
    }
    return true;
}

bool CharTable::column_orthogonality_holds() const {
    const std::size_t one_dims = std::size_t{1} << m_;
    const long long order = static_cast<long long>(group_order());
    const std::size_t stored_count = stored_.size();
    for (std::size_t c1 = 0; c1 < classes_.size(); ++c1) {
        for (std::size_t c2 = c1; c2 < classes_.size(); ++c2) {
            // one-dim contribution: 2^m when the exponent masks agree, else 0
            long long lin = 0;
            const std::uint32_t diff = classes_[c1].rep.alpha ^ classes_[c2].rep.alpha;
            for (std::size_t r = 0; r < one_dims; ++r)
                lin += one_dim_sign(rows_[r].beta, diff);
            Cyclo sum(static_cast<long>(lin));
            for (std::size_t s = 0; s < stored_count; ++s)
                sum += stored_[s][c1] * stored_[s][c2].conj();
            if (c1 == c2) {
                // centralizer order |G| / |class|
                const Cyclo expected(static_cast<long>(
                    order / static_cast<long long>(classes_[c1].size)));
                if (sum != expected) return false;
            } else if (!sum.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool CharTable::dims_square_sum_matches() const {
    std::uint64_t sum = 0;
    for (const RowInfo& r : rows_) sum += static_cast<std::uint64_t>(r.dim) * r.dim;
    return sum == group_order();
}

std::vector<long> decompose(const std::vector<Cyclo>& character, const CharTable& table) {
    if (character.size() != table.classes().size())
        throw std::invalid_argument("decompose: character length does not match class count");
    std::vector<long> mults;
    mults.reserve(table.row_count());
    const Cyclo inv_order = Cyclo(static_cast<long>(table.group_order())).inverse();
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        Cyclo sum;
        for (std::size_t c = 0; c < table.classes().size(); ++c) {
            const Cyclo term = table.value(r, c) * character[c].conj();
            if (!term.is_zero())
                sum += term * Cyclo(static_cast<long>(table.classes()[c].size));
        }
        sum *= inv_order;
        if (!sum.is_rational())
            throw std::domain_error("decompose: non-rational multiplicity");
        const mpq_class& q = sum.coeff(0);
        if (q.get_den() != 1 || q < 0)
            throw std::domain_error("decompose: multiplicity is not a non-negative integer");
        mults.push_back(static_cast<long>(q.get_num().get_si()));
    }
    return mults;
}

bool restriction_check(int k) {
    if (k < 1 || 2 * k > CharTable::kMaxM + 1)
        throw std::invalid_argument("restriction_check: k out of range");
    const int m_big = 2 * k;
    const int m_small = 2 * k - 1;
    const auto top = irrep_generator_images(m_big, -1, IrrepKind::Top);
    // restriction only ever multiplies the first m_small generator images
    const std::vector<Cyclo> traces = subset_traces(top, m_small);
    const CharTable small = CharTable::build(m_small, -1);
    const std::size_t half_plus = small.row_count() - 2;
    const std::size_t half_minus = small.row_count() - 1;
    for (std::size_t c = 0; c < small.classes().size(); ++c) {
        const ESElement rep = small.classes()[c].rep;
        Cyclo tr = traces[rep.alpha];
        if (rep.sign < 0) tr = -tr;
        if (tr != small.value(half_plus, c) + small.value(half_minus, c)) return false;
    }
    return true;
}

PiDecomposition decompose_pi(int strands) {
    if (strands < 2) throw std::invalid_argument("decompose_pi: need >= 2 strands");
    if (strands - 1 > CharTable::kMaxM) throw CapExceeded("decompose_pi: strand cap exceeded");
    const CharTable table = CharTable::build(strands - 1, -1);
    std::vector<Cyclo> character;
    character.reserve(table.classes().size());
    for (const CharClass& cls : table.classes())
        character.push_back(phi_trace(strands, cls.rep));
    const std::vector<long> mults = decompose(character, table);

    PiDecomposition out;
    out.strands = strands;
    out.m = strands - 1;
    out.nu = -1;
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        if (mults[r] == 0) {
            ++out.zero_rows;
            continue;
        }
        out.entries.push_back({table.row(r).label, table.row(r).dim, mults[r]});
        out.dim_total += static_cast<std::uint64_t>(mults[r]) * table.row(r).dim;
    }
    return out;
}

}  // namespace esbraid
