#include "esbraid/esgroup.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace esbraid {

const char* center_kind_name(CenterKind kind) {
    switch (kind) {
        case CenterKind::Z2: return "Z2";
        case CenterKind::Z2xZ2: return "Z2xZ2";
        case CenterKind::Z4: return "Z4";
    }
    return "?";
}

ESGroup::ESGroup(int m, int nu) : m_(m), nu_(nu) {
    if (m < 1 || m > 30) throw std::invalid_argument("ESGroup: m out of range");
    if (nu != 1 && nu != -1) throw std::invalid_argument("ESGroup: nu must be +1 or -1");
}

ESElement ESGroup::generator(int i) const {
    if (i < 1 || i > m_) throw std::out_of_range("ESGroup::generator: index out of range");
    return {std::uint32_t{1} << (i - 1), 1};
}

ESElement ESGroup::central_z() const {
    if (m_ % 2 == 0) throw std::invalid_argument("ESGroup::central_z: m must be odd");
    std::uint32_t alpha = 0;
    for (int i = 1; i <= m_; i += 2) alpha |= std::uint32_t{1} << (i - 1);
    return {alpha, 1};
}

ESElement ESGroup::mul(const ESElement& a, const ESElement& b) const {
    // merging b's generators into a's normal form transposes each x_j in b
    // past every higher-index x_i in a; only i = j+1 flips the sign
    const int swaps = std::popcount(b.alpha & (a.alpha >> 1));
    const int squares = std::popcount(a.alpha & b.alpha);
    int sign = a.sign * b.sign;
    if (swaps & 1) sign = -sign;
    if (nu_ < 0 && (squares & 1)) sign = -sign;
    return {a.alpha ^ b.alpha, sign};
}

ESElement ESGroup::inverse(const ESElement& a) const {
    // in a group of order 2^{m+1} every element's order divides 8 here
    ESElement acc = one();
    ESElement prev = one();
    for (int k = 0; k < 16; ++k) {
        ESElement next = mul(acc, a);
        if (next == one()) return acc;
        prev = acc;
        acc = next;
    }
    throw std::logic_error("ESGroup::inverse: order overflow");
}

int ESGroup::element_order(const ESElement& a) const {
    ESElement acc = a;
    int order = 1;
    while (!(acc == one())) {
        acc = mul(acc, a);
        ++order;
        if (order > 16) throw std::logic_error("ESGroup::element_order: order overflow");
    }
    return order;
}

std::string ESGroup::element_str(const ESElement& e) const {
    std::string out = e.sign < 0 ? "-" : "";
    if (e.alpha == 0) return out + "1";
    bool first = true;
    for (int i = 1; i <= m_; ++i) {
        if (e.alpha & (std::uint32_t{1} << (i - 1))) {
            if (!first) out += "*";
            out += "x" + std::to_string(i);
            first = false;
        }
    }
    return out;
}

std::vector<ESElement> ESGroup::elements() const {
    std::vector<ESElement> out;
    out.reserve(order());
    for (std::uint32_t alpha = 0; alpha < (std::uint32_t{1} << m_); ++alpha) {
        out.push_back({alpha, 1});
        out.push_back({alpha, -1});
    }
    std::sort(out.begin(), out.end(),
              [](const ESElement& a, const ESElement& b) { return a.key() < b.key(); });
    return out;
}

std::vector<ESElement> ESGroup::center() const {
    std::vector<ESElement> out;
    for (const ESElement& e : elements()) {
        bool central = true;
        for (int i = 1; i <= m_ && central; ++i) {
            const ESElement g = generator(i);
            central = mul(e, g) == mul(g, e);
        }
        if (central) out.push_back(e);
    }
    return out;
}

CenterKind ESGroup::center_structure() const {
    if (m_ % 2 == 0) throw std::invalid_argument("ESGroup::center_structure: m must be odd");
    return element_order(central_z()) == 4 ? CenterKind::Z4 : CenterKind::Z2xZ2;
}

std::vector<ESGroup::ConjClass> ESGroup::conjugacy_classes() const {
    if (m_ > 13) throw CapExceeded("ESGroup::conjugacy_classes: m cap exceeded");
    std::vector<bool> seen(std::size_t{1} << (m_ + 1), false);
    std::vector<ConjClass> classes;
    for (const ESElement& start : elements()) {
        if (seen[start.key()]) continue;
        ConjClass cls;
        cls.rep = start;
        std::deque<ESElement> frontier{start};
        seen[start.key()] = true;
        while (!frontier.empty()) {
            ESElement e = frontier.front();
            frontier.pop_front();
            cls.members.push_back(e);
            for (int i = 1; i <= m_; ++i) {
                const ESElement g = generator(i);
                const ESElement conj = mul(mul(g, e), inverse(g));
                if (!seen[conj.key()]) {
                    seen[conj.key()] = true;
                    frontier.push_back(conj);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const ESElement& a, const ESElement& b) { return a.key() < b.key(); });
        classes.push_back(std::move(cls));
    }
    return classes;
}

ExactMatrix phi_matrix(int strands, const ESElement& e) {
    ExactMatrix out = ExactMatrix::identity(std::size_t{1} << strands);
    for (int i = 1; i <= strands - 1; ++i)
        if (e.alpha & (std::uint32_t{1} << (i - 1))) out = out * pure_generator(strands, i);
    if (e.sign < 0) out = -out;
    return out;
}

namespace {

// depth-first over exponent masks; a child prepends a smaller index, which
// keeps the product a sorted normal form and leaves only the path alive
void phi_walk(int strands, std::uint32_t mask, const ExactMatrix& mat,
              std::vector<std::pair<ESElement, std::string>>& out) {
    out.emplace_back(ESElement{mask, 1}, mat.serialize());
    out.emplace_back(ESElement{mask, -1}, (-mat).serialize());
    const int m = strands - 1;
    const int lowest = mask ? std::countr_zero(mask) + 1 : m + 1;
    for (int b = 1; b < lowest; ++b)
        phi_walk(strands, mask | (std::uint32_t{1} << (b - 1)),
                 pure_generator(strands, b) * mat, out);
}

}  // namespace

std::vector<std::pair<ESElement, std::string>> phi_images(int strands) {
    if (strands > 8) throw CapExceeded("phi_images: strand cap exceeded");
    std::vector<std::pair<ESElement, std::string>> out;
    out.reserve(std::size_t{2} << (strands - 1));
    phi_walk(strands, 0, ExactMatrix::identity(std::size_t{1} << strands), out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.key() < b.first.key();
    });
    return out;
}

Cyclo phi_trace(int strands, const ESElement& e) {
    // g_i factorizes as rot90 on site i and pauli_x on site i+1, so the
    // normal-form product factorizes per site with pauli_x arriving first
    Cyclo out(e.sign);
    for (int site = 1; site <= strands; ++site) {
        const bool has_x = site >= 2 && (e.alpha & (std::uint32_t{1} << (site - 2)));
        const bool has_s = site <= strands - 1 && (e.alpha & (std::uint32_t{1} << (site - 1)));
        ExactMatrix w = ExactMatrix::identity(2);
        if (has_x) w = w * pauli_x();
        if (has_s) w = w * rot90();
        const Cyclo t = w.trace();
        if (t.is_zero()) return Cyclo();
        out *= t;
    }
    return out;
}

MatrixGroupEnumeration enumerate_matrix_group(const std::vector<ExactMatrix>& generators,
                                              std::uint64_t cap) {
    if (generators.empty())
        throw std::invalid_argument("enumerate_matrix_group: no generators");
    MatrixGroupEnumeration out;
    std::unordered_set<std::string> visited;
    std::deque<std::string> frontier;
    const std::string id = ExactMatrix::identity(generators[0].dim()).serialize();
    visited.insert(id);
    out.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        const ExactMatrix m = ExactMatrix::deserialize(frontier.front());
        frontier.pop_front();
        for (const ExactMatrix& g : generators) {
            std::string s = (m * g).serialize();
            if (visited.insert(s).second) {
                if (visited.size() > cap)
                    throw CapExceeded("enumerate_matrix_group: cap exceeded");
                out.elements.push_back(s);
                frontier.push_back(std::move(s));
            }
        }
    }
    out.order = visited.size();
    return out;
}

namespace {

CenterKind matrix_center_kind(const std::vector<ExactMatrix>& center_elems) {
    if (center_elems.size() == 2) return CenterKind::Z2;
    for (const ExactMatrix& c : center_elems) {
        if (c.is_identity()) continue;
        if (!(c * c).is_identity()) return CenterKind::Z4;
    }
    return CenterKind::Z2xZ2;
}

}  // namespace

BraidImageReport analyze_braid_image(RepKind kind, int strands, bool with_full,
                                     bool with_structure) {
    if (kind == RepKind::Rho1Hat)
        throw std::invalid_argument("analyze_braid_image: use Pi or PiPrime");
    if (strands < 2) throw std::invalid_argument("analyze_braid_image: need >= 2 strands");
    if (strands > kMaxStrandsPureEnum) throw CapExceeded("pure enumeration cap exceeded");
    if (with_full && strands > kMaxStrandsFullEnum)
        throw CapExceeded("full enumeration cap exceeded");

    BraidImageReport rep;
    rep.strands = strands;
    rep.kind = kind;

    // pure image: closure of the images of sigma_i^2
    std::vector<ExactMatrix> pure_gens;
    for (int i = 1; i <= strands - 1; ++i) {
        const ExactMatrix g = generator_image(kind, strands, i, +1);
        pure_gens.push_back(g * g);
        pure_gens.push_back(pure_gens.back().inverse());
    }
    const MatrixGroupEnumeration pure =
        enumerate_matrix_group(pure_gens, std::uint64_t{1} << (strands + 2));
    rep.order_pure = pure.order;

    std::unordered_set<std::string> pure_set(pure.elements.begin(), pure.elements.end());

    if (with_structure) {
        // center and conjugacy classes of the pure image, by direct search
        std::vector<ExactMatrix> central;
        for (const std::string& s : pure.elements) {
            const ExactMatrix e = ExactMatrix::deserialize(s);
            bool commutes = true;
            for (std::size_t gi = 0; gi < pure_gens.size() && commutes; gi += 2)
                commutes = e * pure_gens[gi] == pure_gens[gi] * e;
            if (commutes) central.push_back(e);
        }
        rep.pure_center_order = central.size();
        rep.pure_center = matrix_center_kind(central);

        std::unordered_set<std::string> assigned;
        std::size_t classes = 0;
        for (const std::string& s : pure.elements) {
            if (assigned.count(s)) continue;
            ++classes;
            std::deque<std::string> orbit{s};
            assigned.insert(s);
            while (!orbit.empty()) {
                const ExactMatrix e = ExactMatrix::deserialize(orbit.front());
                orbit.pop_front();
                for (std::size_t gi = 0; gi < pure_gens.size(); gi += 2) {
                    std::string c =
                        (pure_gens[gi + 1] * e * pure_gens[gi]).serialize();
                    if (assigned.insert(c).second) orbit.push_back(std::move(c));
                }
            }
        }
        rep.pure_class_count = classes;
    }

    if (!with_full) return rep;

    // full image, carrying each element's strand permutation along the BFS;
    // a revisit with a different permutation would refute the quotient map
    struct Node {
        std::string mat;
        Permutation perm;
    };
    std::vector<ExactMatrix> gens;
    std::vector<Permutation> gen_perms;
    for (int i = 1; i <= strands - 1; ++i) {
        for (int sign : {+1, -1}) {
            gens.push_back(generator_image(kind, strands, i, sign));
            gen_perms.push_back(Permutation::transposition(strands, i));
        }
    }
    std::unordered_map<std::string, Permutation> visited;
    std::deque<Node> frontier;
    const std::string id = ExactMatrix::identity(rep_dim(kind, strands)).serialize();
    visited.emplace(id, Permutation::identity(strands));
    frontier.push_back({id, Permutation::identity(strands)});
    bool consistent = true;
    const std::uint64_t cap = 4 * (std::uint64_t{1} << strands) * 40320;  // n! <= 8!
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        const ExactMatrix m = ExactMatrix::deserialize(node.mat);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            std::string s = (m * gens[gi]).serialize();
            Permutation p = node.perm.then(gen_perms[gi]);
            auto [it, inserted] = visited.emplace(s, p);
            if (inserted) {
                if (visited.size() > cap) throw CapExceeded("full enumeration diverged");
                frontier.push_back({std::move(s), std::move(p)});
            } else if (!(it->second == p)) {
                consistent = false;
            }
        }
    }
    rep.full_enumerated = true;
    rep.order_full = visited.size();
    rep.perm_well_defined = consistent;

    std::set<std::vector<int>> perms;
    std::uint64_t kernel = 0;
    bool kernel_ok = true;
    for (const auto& [mat, perm] : visited) {
        perms.insert(perm.images());
        if (perm.is_identity()) {
            ++kernel;
            kernel_ok = kernel_ok && pure_set.count(mat) > 0;
        }
    }
    rep.perm_image_size = perms.size();
    rep.kernel_matches_pure = kernel_ok && kernel == rep.order_pure;
    rep.quotient_order = rep.order_pure ? rep.order_full / rep.order_pure : 0;
    return rep;
}

}  // namespace esbraid
