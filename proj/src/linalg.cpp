#include "esbraid/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace esbraid {

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int log2_exact(std::size_t v) {
    int b = 0;
    while ((std::size_t{1} << b) < v) ++b;
    return b;
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw std::invalid_argument("ExactMatrix: zero dimension");
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (rhs.dim_ != dim_)
        throw std::invalid_argument("ExactMatrix::operator*: dimension mismatch");
    // nonzero column lists of rhs, so the inner loop touches only structure
    std::vector<std::vector<std::uint32_t>> cols(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        const Cyclo* row = &rhs.a_[k * dim_];
        for (std::size_t j = 0; j < dim_; ++j)
            if (!row[j].is_zero()) cols[k].push_back(static_cast<std::uint32_t>(j));
    }
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        const Cyclo* arow = &a_[i * dim_];
        Cyclo* crow = &out.a_[i * dim_];
        for (std::size_t k = 0; k < dim_; ++k) {
            const Cyclo& aik = arow[k];
            if (aik.is_zero()) continue;
            const Cyclo* brow = &rhs.a_[k * dim_];
            for (std::uint32_t j : cols[k]) crow[j].add_mul(aik, brow[j]);
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("ExactMatrix::operator+: dimension mismatch");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw std::invalid_argument("ExactMatrix::operator-: dimension mismatch");
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
    return out;
}

ExactMatrix ExactMatrix::scaled(const Cyclo& factor) const {
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) out.a_[i] = a_[i] * factor;
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = at(r, c);
    return out;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = at(r, c).conj();
    return out;
}

ExactMatrix ExactMatrix::inverse() const {
    ExactMatrix work = *this;
    ExactMatrix inv = identity(dim_);
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        while (pivot < dim_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == dim_) throw std::domain_error("ExactMatrix::inverse: singular matrix");
        if (pivot != col) {
            for (std::size_t j = 0; j < dim_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Cyclo scale = work.at(col, col).inverse();
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!work.at(col, j).is_zero()) work.at(col, j) *= scale;
            if (!inv.at(col, j).is_zero()) inv.at(col, j) *= scale;
        }
        for (std::size_t row = 0; row < dim_; ++row) {
            if (row == col) continue;
            const Cyclo factor = work.at(row, col);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (!work.at(col, j).is_zero()) work.at(row, j) -= factor * work.at(col, j);
                if (!inv.at(col, j).is_zero()) inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

Cyclo ExactMatrix::trace() const {
    Cyclo t;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    return *this == identity(dim_);
}

std::size_t ExactMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& v : a_)
        if (!v.is_zero()) ++n;
    return n;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::string ExactMatrix::serialize() const {
    std::string out = "M" + std::to_string(dim_) + ":";
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i].is_zero()) continue;
        out += std::to_string(i);
        out += '=';
        a_[i].append_canonical(out);
        out += ';';
    }
    return out;
}

ExactMatrix ExactMatrix::deserialize(const std::string& text) {
    if (text.empty() || text[0] != 'M')
        throw std::invalid_argument("ExactMatrix::deserialize: bad header");
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("ExactMatrix::deserialize: bad header");
    std::size_t dim = std::stoul(text.substr(1, colon - 1));
    ExactMatrix out(dim);
    std::size_t pos = colon + 1;
    while (pos < text.size()) {
        std::size_t eq = text.find('=', pos);
        std::size_t idx = std::stoul(text.substr(pos, eq - pos));
        mpq_class coeff[4];
        pos = eq + 1;
        for (auto& q : coeff) {
            std::size_t bar = text.find('|', pos);
            q = mpq_class(text.substr(pos, bar - pos));
            pos = bar + 1;
        }
        if (text[pos] != ';')
            throw std::invalid_argument("ExactMatrix::deserialize: bad entry terminator");
        ++pos;
        out.a_[idx] = Cyclo(coeff[0], coeff[1], coeff[2], coeff[3]);
    }
    return out;
}

ExactMatrix kron(const ExactMatrix& left, const ExactMatrix& right) {
    const std::size_t p = left.dim(), q = right.dim();
    ExactMatrix out(p * q);
    for (std::size_t ra = 0; ra < q; ++ra) {
        for (std::size_t ca = 0; ca < q; ++ca) {
            const Cyclo& f = right.at(ra, ca);
            if (f.is_zero()) continue;
            for (std::size_t rx = 0; rx < p; ++rx)
                for (std::size_t cx = 0; cx < p; ++cx) {
                    const Cyclo& v = left.at(rx, cx);
                    if (!v.is_zero()) out.at(ra * p + rx, ca * p + cx) = f * v;
                }
        }
    }
    return out;
}

ExactMatrix site_operator(int sites, int first_site, const ExactMatrix& block) {
    if (!is_power_of_two(block.dim()))
        throw std::invalid_argument("site_operator: block dimension must be a power of 2");
    const int b = log2_exact(block.dim());
    if (sites < 1 || sites > 24)
        throw std::invalid_argument("site_operator: unsupported site count");
    if (first_site < 1 || first_site + b - 1 > sites)
        throw std::out_of_range("site_operator: block does not fit at that site");
    const std::size_t dim = std::size_t{1} << sites;
    const std::size_t bdim = block.dim();
    const int shift = first_site - 1;
    const std::size_t bmask = (bdim - 1) << shift;
    ExactMatrix out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        const std::size_t xb = (x >> shift) & (bdim - 1);
        const std::size_t rest = x & ~bmask;
        for (std::size_t yb = 0; yb < bdim; ++yb) {
            const Cyclo& v = block.at(xb, yb);
            if (!v.is_zero()) out.at(x, rest | (yb << shift)) = v;
        }
    }
    return out;
}

ExactMatrix conjugate_by(const ExactMatrix& basis, const ExactMatrix& a) {
    return basis.inverse() * a * basis;
}

bool is_unitary(const ExactMatrix& m) {
    return (m * m.dagger()).is_identity();
}

namespace {

ExactMatrix from_ints(std::size_t dim, const int* vals) {
    ExactMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (vals[r * dim + c] != 0) m.at(r, c) = vals[r * dim + c];
    return m;
}

}  // namespace

ExactMatrix r_matrix() {
    static const int vals[16] = {1, 0, 0, 1, 0, 1, -1, 0, 0, 1, 1, 0, -1, 0, 0, 1};
    return from_ints(4, vals).scaled(Cyclo::sqrt2_pow(-1));
}

ExactMatrix r_matrix_tl() {
    return r_matrix().scaled(Cyclo::zeta(3));
}

ExactMatrix rot90() {
    static const int vals[4] = {0, 1, -1, 0};
    return from_ints(2, vals);
}

ExactMatrix rot45() {
    static const int vals[4] = {1, 1, -1, 1};
    return from_ints(2, vals).scaled(Cyclo::sqrt2_pow(-1));
}

ExactMatrix pauli_x() {
    static const int vals[4] = {0, 1, 1, 0};
    return from_ints(2, vals);
}

ExactMatrix pauli_z() {
    static const int vals[4] = {1, 0, 0, -1};
    return from_ints(2, vals);
}

ExactMatrix rot90_diagonalizer() {
    ExactMatrix m(2);
    m.at(0, 0) = 1;
    m.at(0, 1) = Cyclo::imag_unit();
    m.at(1, 0) = Cyclo::imag_unit();
    m.at(1, 1) = 1;
    return m;
}

ExactMatrix pauli_x_diagonalizer() {
    static const int vals[4] = {1, -1, 1, 1};
    return from_ints(2, vals);
}

ExactMatrix phase2() {
    ExactMatrix m(2);
    m.at(0, 0) = Cyclo::zeta();
    m.at(1, 1) = Cyclo::zeta().conj();
    return m;
}

ExactMatrix phase4() {
    ExactMatrix m(4);
    m.at(0, 0) = Cyclo::zeta();
    m.at(1, 1) = Cyclo::zeta().conj();
    m.at(2, 2) = Cyclo::zeta().conj();
    m.at(3, 3) = Cyclo::zeta();
    return m;
}

}  // namespace esbraid
