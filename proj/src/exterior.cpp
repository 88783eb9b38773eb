#include "ac4x/exterior.hpp"

#include <algorithm>

#include "ac4x/errors.hpp"

namespace ac4x {

namespace {

std::vector<std::vector<std::vector<int>>> build_bases() {
    std::vector<std::vector<std::vector<int>>> bases(5);
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> subset;
        for (int a = 0; a < 4; ++a) {
            if (mask & (1 << a)) subset.push_back(a);
        }
        bases[subset.size()].push_back(subset);
    }
    // Enumerating masks in increasing order yields lexicographic subsets,
    // matching (e^12, e^13, e^23, e^14, ...). Re-sort to the fixed component
    // order, which is lexicographic on the index tuples.
    for (auto& b : bases) std::sort(b.begin(), b.end());
    return bases;
}

const std::vector<std::vector<std::vector<int>>>& bases() {
    static const auto b = build_bases();
    return b;
}

int perm_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

}  // namespace

const std::vector<std::vector<int>>& form_basis(int degree) {
    if (degree < 0 || degree > 4) throw DegreeOutOfRange("form_basis: degree 0..4");
    return bases()[static_cast<std::size_t>(degree)];
}

int basis_index(const std::vector<int>& subset) {
    const auto& b = form_basis(static_cast<int>(subset.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == subset) return static_cast<int>(i);
    }
    throw DegreeOutOfRange("basis_index: not a valid subset");
}

int insert_sign(int degree, int comp, int axis, int* out_comp) {
    const auto& subset = form_basis(degree)[static_cast<std::size_t>(comp)];
    int below = 0;
    for (int i : subset) {
        if (i == axis) return 0;
        if (i < axis) ++below;
    }
    std::vector<int> merged = subset;
    merged.push_back(axis);
    std::sort(merged.begin(), merged.end());
    *out_comp = basis_index(merged);
    return below % 2 == 0 ? 1 : -1;
}

int star_sign(int degree, int comp, int* out_comp) {
    const auto& subset = form_basis(degree)[static_cast<std::size_t>(comp)];
    std::vector<int> complement;
    for (int a = 0; a < 4; ++a) {
        if (std::find(subset.begin(), subset.end(), a) == subset.end())
            complement.push_back(a);
    }
    *out_comp = basis_index(complement);
    std::vector<int> concat = subset;
    concat.insert(concat.end(), complement.begin(), complement.end());
    return perm_sign(concat);
}

int wedge_sign(int k1, int c1, int k2, int c2, int* out_comp) {
    const auto& s1 = form_basis(k1)[static_cast<std::size_t>(c1)];
    const auto& s2 = form_basis(k2)[static_cast<std::size_t>(c2)];
    std::vector<int> concat = s1;
    for (int a : s2) {
        if (std::find(s1.begin(), s1.end(), a) != s1.end()) return 0;
        concat.push_back(a);
    }
    std::vector<int> merged = concat;
    std::sort(merged.begin(), merged.end());
    *out_comp = basis_index(merged);
    return perm_sign(concat);
}

}  // namespace ac4x
