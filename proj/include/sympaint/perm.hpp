#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sympaint {

// Bijection on {0..n-1}, stored as its image table.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<char> seen(images_.size(), 0);
        for (int v : images_) {
            if (v < 0 || v >= degree() || seen[v])
                throw DomainError("image table is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(int degree) {
        std::vector<int> im(degree);
        std::iota(im.begin(), im.end(), 0);
        return Permutation(Unchecked{}, std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int v) const { return images_[v]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int v = 0; v < degree(); ++v)
            if (images_[v] != v) return false;
        return true;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    struct Unchecked {};
    Permutation(Unchecked, std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;

    friend Permutation compose(const Permutation&, const Permutation&);
    friend Permutation invert(const Permutation&);
};

// compose(a, b) applies b first: v -> a(b(v)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DomainError("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int v = 0; v < a.degree(); ++v) im[v] = a(b(v));
    return Permutation(Permutation::Unchecked{}, std::move(im));
}

inline Permutation invert(const Permutation& a) {
    std::vector<int> im(a.degree());
    for (int v = 0; v < a.degree(); ++v) im[a(v)] = v;
    return Permutation(Permutation::Unchecked{}, std::move(im));
}

}  // namespace sympaint
