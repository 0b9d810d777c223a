#include "fusionq/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fusionq {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative n");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    Permutation p;
    p.images_ = std::move(v);
    return p;
}

Permutation Permutation::generator(int i, int n) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    return identity(n).times_generator(i);
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return r;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) inv += images_[i] > images_[j] ? 1 : 0;
    }
    return inv;
}

Permutation Permutation::times_generator(int i) const {
    if (i < 1 || i >= size()) throw std::out_of_range("generator index out of range");
    Permutation r = *this;
    std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(i)]);
    return r;
}

Permutation Permutation::generator_times(int i) const {
    if (i < 1 || i >= size()) throw std::out_of_range("generator index out of range");
    Permutation r = *this;
    for (auto& v : r.images_) {
        if (v == i) {
            v = i + 1;
        } else if (v == i + 1) {
            v = i;
        }
    }
    return r;
}

Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.size() != t.size()) throw std::invalid_argument("permutations of different degree");
    Permutation r;
    r.images_.resize(t.images_.size());
    for (std::size_t i = 0; i < t.images_.size(); ++i) r.images_[i] = s(t.images_[i]);
    return r;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(images_[i]);
    }
    return s + "]";
}

Permutation perm_compose(const Permutation& s, const Permutation& t) { return s * t; }

LengthAndWord perm_length_and_word(const Permutation& s) {
    LengthAndWord out;
    std::vector<int> v = s.images();
    std::vector<int> recorded;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < v.size() && v[i] < v[i + 1]) ++i;
        if (i + 1 >= v.size()) break;
        std::swap(v[i], v[i + 1]);
        recorded.push_back(static_cast<int>(i) + 1);
    }
    // s * sigma_{r_1} * ... * sigma_{r_l} = id, so s = sigma_{r_l} * ... * sigma_{r_1}.
    out.word.assign(recorded.rbegin(), recorded.rend());
    out.length = static_cast<int>(out.word.size());
    return out;
}

Permutation longest_element(int n) {
    if (n < 1) throw std::invalid_argument("longest_element needs n >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation from_word(const std::vector<int>& word, int n) {
    Permutation p = Permutation::identity(n);
    for (int i : word) p = p.times_generator(i);
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    std::vector<int> v = Permutation::identity(n).images();
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    return f;
}

std::size_t lex_rank(const Permutation& s) {
    const int n = s.size();
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_after = 0;
        for (int j = i + 1; j < n; ++j) smaller_after += s(j + 1) < s(i + 1) ? 1 : 0;
        rank += static_cast<std::size_t>(smaller_after) * factorial(n - 1 - i);
    }
    return rank;
}

Permutation shift_embed(const Permutation& s, int offset, int n) {
    if (offset < 0 || offset + s.size() > n) throw std::invalid_argument("shift_embed out of range");
    std::vector<int> v = Permutation::identity(n).images();
    for (int i = 1; i <= s.size(); ++i) v[static_cast<std::size_t>(offset + i - 1)] = s(i) + offset;
    return Permutation(std::move(v));
}

}  // namespace fusionq
