#pragma once

#include <string>
#include <vector>

namespace esbraid {

struct BraidLetter {
    int index;  // generator index, 1 <= index <= strands-1
    int sign;   // +1 or -1

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid group on `strands` strands. Letters act left to
/// right: the image of a concatenation is the product of the images in
/// that order, for matrices and permutations alike.
class BraidWord {
public:
    explicit BraidWord(int strands);
    BraidWord(int strands, std::vector<BraidLetter> letters);

    /// Grammar: WORD := TOKEN (SP TOKEN)*;  TOKEN := "s" INT | "s" INT "^-1".
    /// Whitespace-only input is the empty word. Throws std::invalid_argument
    /// on syntax errors and std::out_of_range on generator indices outside
    /// [1, strands-1].
    static BraidWord parse(const std::string& text, int strands);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    int exponent_sum() const;

    BraidWord& append(BraidLetter l);
    BraidWord concat(const BraidWord& rhs) const;
    BraidWord inverse() const;
    /// Same letters viewed in a larger braid group.
    BraidWord widened(int strands) const;

    std::string str() const;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// Bijection on {0, .., n-1}; composition is left-to-right application.
class Permutation {
public:
    static Permutation identity(int n);
    static Permutation transposition(int n, int i);  // swaps i-1 and i (1-based site)

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int x) const { return img_[static_cast<std::size_t>(x)]; }

    /// this followed by rhs.
    Permutation then(const Permutation& rhs) const;

    int cycle_count() const;
    bool is_identity() const;
    const std::vector<int>& images() const { return img_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

Permutation permutation(const BraidWord& word);

/// Number of link components of the closure: cycles of the induced
/// permutation, fixed points included.
int closure_components(const BraidWord& word);

}  // namespace esbraid
