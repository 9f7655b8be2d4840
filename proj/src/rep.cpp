#include "esbraid/rep.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace esbraid {

const char* rep_kind_name(RepKind kind) {
    switch (kind) {
        case RepKind::Pi: return "pi";
        case RepKind::PiPrime: return "pi-prime";
        case RepKind::Rho1Hat: return "rho1-hat";
    }
    return "?";
}

std::size_t rep_dim(RepKind kind, int strands) {
    if (kind == RepKind::Rho1Hat) return std::size_t{1} << ((strands - 1) / 2);
    return std::size_t{1} << strands;
}

namespace {

void check_strands(RepKind kind, int strands) {
    if (strands < 2) throw std::invalid_argument("representation needs at least 2 strands");
    if (kind == RepKind::Rho1Hat) {
        if (strands % 2 == 0)
            throw std::invalid_argument("rho1-hat is defined for odd strand counts only");
        if (strands > kMaxStrandsRho1Hat)
            throw CapExceeded("rho1-hat strand cap exceeded");
    } else if (strands > kMaxStrandsDense) {
        throw CapExceeded("dense representation strand cap exceeded");
    }
}

ExactMatrix rho1hat_generator(int strands, int index) {
    const int k = (strands - 1) / 2;
    if (index == 1) return site_operator(k, 1, phase2());
    if (index % 2 == 0) return site_operator(k, index / 2, rot45());
    return site_operator(k, (index - 1) / 2, phase4());
}

ExactMatrix build_generator(RepKind kind, int strands, int index, int sign) {
    switch (kind) {
        case RepKind::Pi: {
            ExactMatrix r = r_matrix();
            return site_operator(strands, index, sign > 0 ? r : r.inverse());
        }
        case RepKind::PiPrime: {
            ExactMatrix r = r_matrix_tl();
            return site_operator(strands, index, sign > 0 ? r : r.inverse());
        }
        case RepKind::Rho1Hat: {
            ExactMatrix g = rho1hat_generator(strands, index);
            return sign > 0 ? g : g.inverse();
        }
    }
    throw std::logic_error("unreachable");
}

std::map<std::tuple<int, int, int, int>, ExactMatrix>& generator_cache() {
    static std::map<std::tuple<int, int, int, int>, ExactMatrix> cache;
    return cache;
}
std::mutex cache_mutex;

}  // namespace

const ExactMatrix& generator_image(RepKind kind, int strands, int index, int sign) {
    check_strands(kind, strands);
    if (index < 1 || index > strands - 1)
        throw std::out_of_range("generator index out of range");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");

    const auto key = std::make_tuple(static_cast<int>(kind), strands, index, sign);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = generator_cache();
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, build_generator(kind, strands, index, sign)).first;
    return it->second;
}

ExactMatrix evaluate(RepKind kind, const BraidWord& word) {
    check_strands(kind, word.strands());
    ExactMatrix out = ExactMatrix::identity(rep_dim(kind, word.strands()));
    for (const auto& l : word.letters())
        out = out * generator_image(kind, word.strands(), l.index, l.sign);
    return out;
}

ExactMatrix pure_generator(int strands, int index) {
    check_strands(RepKind::Pi, strands);
    if (index < 1 || index > strands - 1)
        throw std::out_of_range("pure generator index out of range");
    return site_operator(strands, index, r_matrix() * r_matrix());
}

ExactMatrix basis_change(int strands) {
    if (strands < 2) throw std::invalid_argument("basis_change: need at least 2 strands");
    if (strands > kMaxStrandsDense) throw CapExceeded("basis_change strand cap exceeded");
    ExactMatrix out = ExactMatrix::identity(1);
    for (int j = 0; j < strands / 2; ++j) {
        out = kron(out, rot90_diagonalizer());
        out = kron(out, pauli_x_diagonalizer());
    }
    if (strands % 2) out = kron(out, ExactMatrix::identity(2));
    return out;
}

bool yang_baxter_holds(const ExactMatrix& r) {
    if (r.dim() != 4) throw std::invalid_argument("yang_baxter_holds: need a 4x4 matrix");
    const ExactMatrix a = site_operator(3, 1, r);
    const ExactMatrix b = site_operator(3, 2, r);
    return a * b * a == b * a * b;
}

CheckReport verify_lemma22(int strands) {
    if (strands < 2) throw std::invalid_argument("verify_lemma22: need at least 2 strands");
    if (strands > kMaxStrandsDense) throw CapExceeded("verify_lemma22 strand cap exceeded");
    const int n = strands;
    CheckReport rep;

    const ExactMatrix r = r_matrix();
    const ExactMatrix rinv = r.inverse();
    const ExactMatrix r2 = r * r;
    const ExactMatrix i2 = ExactMatrix::identity(2);
    const ExactMatrix i4 = ExactMatrix::identity(4);
    const Cyclo inv_sqrt2 = Cyclo::sqrt2_pow(-1);

    rep.add("(a) r^2 = rot90 (x) pauli_x", r2 == kron(rot90(), pauli_x()));
    rep.add("(b) r = (r^2 + 1)/sqrt2", r == (r2 + i4).scaled(inv_sqrt2));
    rep.add("(b) r^-1 = (r^-2 + 1)/sqrt2", rinv == (rinv * rinv + i4).scaled(inv_sqrt2));
    {
        const ExactMatrix lhs = kron(r2, i2) * kron(i2, r2);
        const ExactMatrix rhs = kron(i2, r2) * kron(r2, i2);
        rep.add("(c) adjacent squares anticommute", lhs == -rhs);
    }
    if (n >= 3) {
        bool ok = true;
        for (int i = 1; i + 1 <= n - 1; ++i)
            ok = ok && pure_generator(n, i) * pure_generator(n, i + 1) ==
                           -(pure_generator(n, i + 1) * pure_generator(n, i));
        rep.add("(d) g_i g_{i+1} = -g_{i+1} g_i", ok);
    } else {
        rep.skip("(d) g_i g_{i+1} = -g_{i+1} g_i");
    }
    {
        const ExactMatrix lhs = kron(rinv, i2) * kron(i2, r2) * kron(r, i2);
        const ExactMatrix rhs = kron(i2, r2) * kron(r2, i2);
        rep.add("(e) conjugation pulls in the neighbour square", lhs == rhs);
    }
    if (n >= 3) {
        bool ok = true;
        for (int i = 1; i <= n - 1; ++i) {
            for (int delta : {-1, +1}) {
                const int j = i + delta;
                if (j < 1 || j > n - 1) continue;
                const ExactMatrix lhs = generator_image(RepKind::Pi, n, i, -1) *
                                        pure_generator(n, j) *
                                        generator_image(RepKind::Pi, n, i, +1);
                ok = ok && lhs == pure_generator(n, j) * pure_generator(n, i);
            }
        }
        rep.add("(f) sigma_i^-1 g_{i+-1} sigma_i = g_{i+-1} g_i", ok);
    } else {
        rep.skip("(f) sigma_i^-1 g_{i+-1} sigma_i = g_{i+-1} g_i");
    }
    if (n >= 4) {
        bool ok = true;
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i + 2; j <= n - 1; ++j) {
                ok = ok && pure_generator(n, i) * pure_generator(n, j) ==
                               pure_generator(n, j) * pure_generator(n, i);
                ok = ok && generator_image(RepKind::Pi, n, i, +1) * pure_generator(n, j) ==
                               pure_generator(n, j) * generator_image(RepKind::Pi, n, i, +1);
            }
        rep.add("(g) far generators commute", ok);
    } else {
        rep.skip("(g) far generators commute");
    }
    {
        bool ok = r2 * r2 == -i4;
        for (int i = 1; i <= n - 1; ++i) {
            const ExactMatrix g = pure_generator(n, i);
            ok = ok && g * g == -ExactMatrix::identity(g.dim());
        }
        rep.add("(h) r^4 = -1 and g_i^2 = -1", ok);
    }
    rep.add("(i) rot90 diagonalizer",
            conjugate_by(rot90_diagonalizer(), rot90()) == pauli_z().scaled(Cyclo::imag_unit()) &&
                conjugate_by(rot90_diagonalizer(), pauli_x()) == pauli_x());
    rep.add("(j) pauli_x diagonalizer",
            conjugate_by(pauli_x_diagonalizer(), pauli_x()) == pauli_z() &&
                conjugate_by(pauli_x_diagonalizer(), rot90()) == rot90());
    {
        const ExactMatrix p = basis_change(n);
        const ExactMatrix pinv = p.inverse();
        bool ok = true;
        bool any = false;
        const ExactMatrix zz = kron(pauli_z(), pauli_z());
        for (int idx = 1; idx <= n - 1; idx += 2) {  // odd indices diagonalize
            if (idx + 1 > n) break;
            any = true;
            const ExactMatrix lhs = pinv * pure_generator(n, idx) * p;
            ok = ok && lhs == site_operator(n, idx, zz).scaled(Cyclo::imag_unit());
        }
        for (int idx = 2; idx <= n - 1; idx += 2) {  // even indices are fixed
            any = true;
            const ExactMatrix lhs = pinv * pure_generator(n, idx) * p;
            ok = ok && lhs == pure_generator(n, idx);
        }
        if (any)
            rep.add("(k) basis change diagonalizes odd g, fixes even g", ok);
        else
            rep.skip("(k) basis change diagonalizes odd g, fixes even g");
    }
    return rep;
}

CheckReport verify_braid_relations(RepKind kind, int max_strands) {
    CheckReport rep;
    const int lo = (kind == RepKind::Rho1Hat) ? 3 : 2;
    for (int n = lo; n <= max_strands; ++n) {
        if (kind == RepKind::Rho1Hat && n % 2 == 0) continue;
        bool far_ok = true;
        bool adj_ok = true;
        for (int i = 1; i <= n - 1; ++i) {
            const ExactMatrix a = generator_image(kind, n, i, +1);
            for (int j = i + 2; j <= n - 1; ++j) {
                const ExactMatrix b = generator_image(kind, n, j, +1);
                far_ok = far_ok && a * b == b * a;
            }
            if (i + 1 <= n - 1) {
                const ExactMatrix b = generator_image(kind, n, i + 1, +1);
                adj_ok = adj_ok && a * b * a == b * a * b;
            }
        }
        const std::string tag = std::string(rep_kind_name(kind)) + " n=" + std::to_string(n);
        if (n >= 4)
            rep.add("(B1) " + tag, far_ok);
        else
            rep.skip("(B1) " + tag);
        if (n >= 3)
            rep.add("(B2) " + tag, adj_ok);
        else
            rep.skip("(B2) " + tag);
    }
    return rep;
}

}  // namespace esbraid
