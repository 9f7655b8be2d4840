#include "esbraid/braid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace esbraid {

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
}

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : BraidWord(strands) {
    for (const auto& l : letters) append(l);
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
    BraidWord word(strands);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 's')
            throw std::invalid_argument("braid parse: bad token '" + tok + "'");
        int sign = 1;
        std::string digits = tok.substr(1);
        if (auto caret = digits.find('^'); caret != std::string::npos) {
            if (digits.substr(caret) != "^-1")
                throw std::invalid_argument("braid parse: bad exponent in '" + tok + "'");
            sign = -1;
            digits = digits.substr(0, caret);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("braid parse: bad index in '" + tok + "'");
        long idx = std::stol(digits);
        if (idx < 1 || idx > strands - 1)
            throw std::out_of_range("braid parse: generator s" + digits +
                                    " out of range for " + std::to_string(strands) +
                                    " strands");
        word.append({static_cast<int>(idx), sign});
    }
    return word;
}

int BraidWord::exponent_sum() const {
    int e = 0;
    for (const auto& l : letters_) e += l.sign;
    return e;
}

BraidWord& BraidWord::append(BraidLetter l) {
    if (l.index < 1 || l.index > strands_ - 1)
        throw std::out_of_range("BraidWord::append: generator index out of range");
    if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("BraidWord::append: sign must be +1 or -1");
    letters_.push_back(l);
    return *this;
}

BraidWord BraidWord::concat(const BraidWord& rhs) const {
    if (rhs.strands_ != strands_)
        throw std::invalid_argument("BraidWord::concat: strand counts differ");
    BraidWord out = *this;
    for (const auto& l : rhs.letters_) out.append(l);
    return out;
}

BraidWord BraidWord::inverse() const {
    BraidWord out(strands_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        out.append({it->index, -it->sign});
    return out;
}

BraidWord BraidWord::widened(int strands) const {
    if (strands < strands_)
        throw std::invalid_argument("BraidWord::widened: cannot shrink strand count");
    BraidWord out(strands);
    for (const auto& l : letters_) out.append(l);
    return out;
}

std::string BraidWord::str() const {
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += 's' + std::to_string(l.index);
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img_.resize(static_cast<std::size_t>(n));
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::transposition(int n, int i) {
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
    return p;
}

Permutation Permutation::then(const Permutation& rhs) const {
    Permutation out;
    out.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
        out.img_[x] = rhs.img_[static_cast<std::size_t>(img_[x])];
    return out;
}

int Permutation::cycle_count() const {
    std::vector<bool> seen(img_.size(), false);
    int cycles = 0;
    for (std::size_t start = 0; start < img_.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::size_t j = start;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(img_[j]);
        }
    }
    return cycles;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
        if (img_[x] != static_cast<int>(x)) return false;
    return true;
}

Permutation permutation(const BraidWord& word) {
    Permutation p = Permutation::identity(word.strands());
    for (const auto& l : word.letters())
        p = p.then(Permutation::transposition(word.strands(), l.index));
    return p;
}

int closure_components(const BraidWord& word) {
    return permutation(word).cycle_count();
}

}  // namespace esbraid
