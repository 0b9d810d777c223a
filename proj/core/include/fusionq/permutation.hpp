#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace fusionq {

/// Element of S_n in one-line notation: images()[i-1] is the image of i.
///
/// Composition is function composition, (s * t)(i) = s(t(i)). Under this
/// convention s * sigma_i swaps the entries in positions i and i+1, and
/// sigma_i * s swaps the values i and i+1.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless images is a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// sigma_i = (i, i+1) in S_n.
    static Permutation generator(int i, int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Number of inversions.
    int length() const;

    /// this * sigma_i.
    Permutation times_generator(int i) const;
    /// sigma_i * this.
    Permutation generator_times(int i) const;
    /// True when length(this * sigma_i) > length(this).
    bool right_ascent(int i) const { return (*this)(i) < (*this)(i + 1); }

    friend Permutation operator*(const Permutation& s, const Permutation& t);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    /// Lexicographic on the one-line notation.
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

    std::string to_string() const;

private:
    std::vector<int> images_;
};

/// s * t with (s * t)(i) = s(t(i)); throws on mismatched n.
Permutation perm_compose(const Permutation& s, const Permutation& t);

struct LengthAndWord {
    int length = 0;
    /// Generator indices i_1..i_l with s = sigma_{i_1} * ... * sigma_{i_l}.
    std::vector<int> word;
};

/// Inversion count and a reduced word. The word comes from repeatedly
/// swapping the leftmost descent of the one-line notation (multiplying by
/// sigma_i on the right) until the identity is reached.
LengthAndWord perm_length_and_word(const Permutation& s);

/// sigma_0 = [n, n-1, ..., 1].
Permutation longest_element(int n);

/// sigma_{w_1} * ... * sigma_{w_k} in S_n.
Permutation from_word(const std::vector<int>& word, int n);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Position of s in all_permutations(s.size()).
std::size_t lex_rank(const Permutation& s);

/// n! as a size.
std::size_t factorial(int n);

/// Embeds s in S_n acting on {offset+1, ..., offset+s.size()}, fixing the
/// rest; corresponds to T_i -> T_{i+offset}.
Permutation shift_embed(const Permutation& s, int offset, int n);

}  // namespace fusionq
