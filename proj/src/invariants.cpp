#include "esbraid/invariants.hpp"

#include "esbraid/linalg.hpp"
#include "esbraid/rep.hpp"

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace esbraid {

namespace {

int sign_pow(int base, long e) {
    if (base == 1) return 1;
    return (e % 2 == 0) ? 1 : -1;
}

Cyclo trace_of_image(const BraidWord& word) {
    return evaluate(RepKind::Pi, word).trace();
}

Cyclo t_r_from_trace(const Cyclo& tr, int strands, int e, int alpha) {
    Cyclo out = tr * Cyclo::sqrt2_pow(-strands);
    if (sign_pow(alpha, strands - e) < 0) out = -out;
    return out;
}

Cyclo jones4_from_trace(const Cyclo& tr, int strands, int e, int alpha) {
    // j4 = t_r * (-1)^{n-1+e} * alpha^{n-e} / sqrt(2)
    Cyclo j = t_r_from_trace(tr, strands, e, alpha) * Cyclo::sqrt2_pow(-1);
    if (sign_pow(-1, strands - 1 + e) < 0) j = -j;
    if (sign_pow(alpha, strands - e) < 0) j = -j;
    return j;
}

}  // namespace

Cyclo t_r(const BraidWord& word, int alpha) {
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("t_r: alpha must be +1 or -1");
    return t_r_from_trace(trace_of_image(word), word.strands(), word.exponent_sum(), alpha);
}

Cyclo jones4(const BraidWord& word) {
    const Cyclo tr = trace_of_image(word);
    const int n = word.strands();
    const int e = word.exponent_sum();
    const Cyclo plus = jones4_from_trace(tr, n, e, +1);
    const Cyclo minus = jones4_from_trace(tr, n, e, -1);
    if (plus != minus) throw std::logic_error("jones4: alpha-dependent value");
    if (!plus.is_real()) throw std::logic_error("jones4: value is not real");
    return plus;
}

Cyclo jones4_direct(const BraidWord& word) {
    const int n = word.strands();
    const int e = word.exponent_sum();
    const int n_odd = (n % 2 == 1) ? n : n + 1;
    const Cyclo tr = evaluate(RepKind::Rho1Hat, word.widened(n_odd)).trace();
    // rescaling every generator by z^3 multiplies the image trace by z^{3e}
    Cyclo out = tr * Cyclo::zeta(3L * e);
    out *= Cyclo::zeta(e);  // (-1)^{e/4} with the branch (-1)^{1/4} = z
    if (sign_pow(-1, n - 1) < 0) out = -out;
    out *= Cyclo::sqrt2_pow(-((1 + sign_pow(-1, n)) / 2));
    return out;
}

ArfValue arf(const BraidWord& word) {
    const Cyclo j = jones4(word);
    if (j.is_zero()) return {false, 0};
    const Cyclo magnitude = Cyclo::sqrt2_pow(closure_components(word) - 1);
    if (j == magnitude) return {true, 0};
    if (j == -magnitude) return {true, 1};
    throw std::logic_error("arf: jones4 value is neither 0 nor +-sqrt(2)^(c-1)");
}

bool tl_quadratic_holds(const ExactMatrix& block4) {
    const ExactMatrix id = ExactMatrix::identity(block4.dim());
    return ((block4 + id) * (block4 - id.scaled(Cyclo::imag_unit()))).is_zero();
}

CheckReport verify_tl_relations(int strands) {
    if (strands < 3) throw std::invalid_argument("verify_tl_relations: need >= 3 strands");
    if (strands > kMaxStrandsDense) throw CapExceeded("verify_tl_relations: strand cap");
    CheckReport rep;
    const ExactMatrix rtl = r_matrix_tl();
    const std::size_t dim = std::size_t{1} << strands;
    const ExactMatrix id = ExactMatrix::identity(dim);
    const Cyclo iu = Cyclo::imag_unit();
    for (int i = 1; i <= strands - 1; ++i) {
        const ExactMatrix a = site_operator(strands, i, rtl);
        rep.add("TL1 site " + std::to_string(i),
                ((a + id) * (a - id.scaled(iu))).is_zero());
    }
    for (int i = 1; i + 1 <= strands - 1; ++i) {
        const ExactMatrix a = site_operator(strands, i, rtl);
        const ExactMatrix b = site_operator(strands, i + 1, rtl);
        rep.add("TL2 sites " + std::to_string(i) + "," + std::to_string(i + 1),
                (a * b * a + a * b + b * a + a + b + id).is_zero());
        const ExactMatrix diff = a - b;
        rep.add("TL3 sites " + std::to_string(i) + "," + std::to_string(i + 1),
                diff * diff == id.scaled(iu));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Kauffman bracket oracle.
//
// Arithmetic lives in Z[w]/(w^8 + 1) with w a primitive 16th root of unity;
// the bracket variable is A = w^{-1} = -w^7, chosen so the loop value
// -A^2 - A^{-2} lands on -sqrt(2) and t = A^{-4} = i. Even powers of w span
// the degree-4 subfield the rest of the engine lives in.
// ---------------------------------------------------------------------------

namespace {

struct Cyclo16 {
    std::array<mpz_class, 8> c{};

    static Cyclo16 monomial(long power, const mpz_class& coeff) {
        long k = power % 16;
        if (k < 0) k += 16;
        Cyclo16 out;
        if (k < 8)
            out.c[static_cast<std::size_t>(k)] = coeff;
        else
            out.c[static_cast<std::size_t>(k - 8)] = -coeff;
        return out;
    }

    void add_monomial(long power, const mpz_class& coeff) {
        long k = power % 16;
        if (k < 0) k += 16;
        if (k < 8)
            c[static_cast<std::size_t>(k)] += coeff;
        else
            c[static_cast<std::size_t>(k - 8)] -= coeff;
    }
};

// Laurent polynomial in the bracket variable, integer coefficients.
using Laurent = std::map<long, mpz_class>;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    return out;
}

int state_loop_count(const BraidWord& word, std::uint32_t state) {
    const int n = word.strands();
    const std::size_t letters = word.size();
    std::vector<int> parent(static_cast<std::size_t>(n) + 2 * letters);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int u) {
        while (parent[static_cast<std::size_t>(u)] != u) {
            parent[static_cast<std::size_t>(u)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])];
            u = parent[static_cast<std::size_t>(u)];
        }
        return u;
    };
    int unions = 0;
    const auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            ++unions;
        }
    };
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 0);
    int next_id = n;
    for (std::size_t c = 0; c < letters; ++c) {
        if (!(state & (std::uint32_t{1} << c))) continue;  // identity smoothing
        const int i = word.letters()[c].index;
        // cap joins the two incoming arcs; a fresh cup feeds the outputs
        unite(cur[static_cast<std::size_t>(i - 1)], cur[static_cast<std::size_t>(i)]);
        cur[static_cast<std::size_t>(i - 1)] = next_id;
        cur[static_cast<std::size_t>(i)] = next_id;
        ++next_id;
    }
    for (int j = 0; j < n; ++j) unite(cur[static_cast<std::size_t>(j)], j);
    return next_id - unions;
}

}  // namespace

Cyclo kauffman_oracle(const BraidWord& word) {
    const std::size_t letters = word.size();
    if (letters > kKauffmanMaxCrossings)
        throw CapExceeded("kauffman_oracle: crossing cap exceeded");
    const int n = word.strands();

    // loop value as a Laurent polynomial: -A^2 - A^{-2}, plus its powers
    Laurent delta;
    delta[2] = -1;
    delta[-2] = -1;
    const std::size_t max_loops = static_cast<std::size_t>(n) + letters;
    std::vector<Laurent> delta_pow(max_loops);
    delta_pow[0][0] = 1;
    for (std::size_t p = 1; p < max_loops; ++p)
        delta_pow[p] = laurent_mul(delta_pow[p - 1], delta);

    Laurent bracket;
    for (std::uint32_t state = 0; state < (std::uint32_t{1} << letters); ++state) {
        long a_exponent = 0;
        for (std::size_t c = 0; c < letters; ++c) {
            const bool split = state & (std::uint32_t{1} << c);
            const int sign = word.letters()[c].sign;
            // positive crossing: A for the identity smoothing, A^-1 for the
            // split one; a negative crossing swaps the weights
            a_exponent += (sign > 0) == !split ? 1 : -1;
        }
        const int loops = state_loop_count(word, state);
        for (const auto& [e, coeff] : delta_pow[static_cast<std::size_t>(loops - 1)])
            bracket[a_exponent + e] += coeff;
    }

    // writhe normalization (-A^3)^{-w}
    const long w = word.exponent_sum();
    Cyclo16 total;
    for (const auto& [e, coeff] : bracket) {
        if (coeff == 0) continue;
        mpz_class signed_coeff = (w % 2 == 0) ? coeff : -coeff;
        // substitute A = omega^{-1}: A^k -> omega^{-k}
        total.add_monomial(-(e - 3 * w), signed_coeff);
    }

    for (std::size_t k = 1; k < 8; k += 2) {
        if (total.c[k] != 0)
            throw std::logic_error("kauffman_oracle: value escaped the even subfield");
    }
    return Cyclo(mpq_class(total.c[0]), mpq_class(total.c[2]), mpq_class(total.c[4]),
                 mpq_class(total.c[6]));
}

LinkInvariants link_invariants(const BraidWord& word) {
    LinkInvariants out;
    out.word = word.str();
    out.strands = word.strands();
    out.exponent_sum = word.exponent_sum();
    out.components = closure_components(word);
    const Cyclo tr = trace_of_image(word);
    out.t_r_plus = t_r_from_trace(tr, out.strands, out.exponent_sum, +1);
    out.t_r_minus = t_r_from_trace(tr, out.strands, out.exponent_sum, -1);
    out.j4 = jones4_from_trace(tr, out.strands, out.exponent_sum, +1);
    {
        const Cyclo check = jones4_from_trace(tr, out.strands, out.exponent_sum, -1);
        if (check != out.j4) throw std::logic_error("link_invariants: alpha-dependent jones4");
    }
    if (out.j4.is_zero()) {
        out.arf = {false, 0};
    } else {
        const Cyclo magnitude = Cyclo::sqrt2_pow(out.components - 1);
        if (out.j4 == magnitude)
            out.arf = {true, 0};
        else if (out.j4 == -magnitude)
            out.arf = {true, 1};
        else
            throw std::logic_error("link_invariants: arf trichotomy violated");
    }
    return out;
}

}  // namespace esbraid
