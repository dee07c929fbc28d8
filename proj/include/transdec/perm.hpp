#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace transdec {

/// A permutation of {0..n-1} stored as an image array: img[i] is the image of i.
struct Permutation {
    std::vector<int> img;

    Permutation() = default;

    explicit Permutation(std::vector<int> images) : img(std::move(images)) {
        std::vector<char> seen(img.size(), 0);
        for (int v : img) {
            if (v < 0 || v >= static_cast<int>(img.size()) || seen[v])
                throw input_error("permutation image array is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        Permutation p;
        p.img.resize(static_cast<std::size_t>(n));
        std::iota(p.img.begin(), p.img.end(), 0);
        return p;
    }

    int degree() const { return static_cast<int>(img.size()); }

    int operator()(int i) const { return img[static_cast<std::size_t>(i)]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    auto operator<=>(const Permutation&) const = default;
};

/// result applies p then q: result(i) = q(p(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw input_error("compose: degree mismatch");
    Permutation r;
    r.img.resize(p.img.size());
    for (int i = 0; i < p.degree(); ++i) r.img[static_cast<std::size_t>(i)] = q(p(i));
    return r;
}

inline Permutation inverse(const Permutation& p) {
    Permutation r;
    r.img.resize(p.img.size());
    for (int i = 0; i < p.degree(); ++i) r.img[static_cast<std::size_t>(p(i))] = i;
    return r;
}

inline std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (int i = 0; i < p.degree(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p(i));
    }
    return s + "]";
}

} // namespace transdec
