#include "dtri/kbest.hpp"

namespace dtri {

std::vector<double> k_smallest_combination(const std::vector<double>& a,
                                           const std::vector<double>& b, double c,
                                           std::size_t k) {
    std::vector<double> out;
    if (k == 0) return out;
    out.reserve(k);
    sorted_matrix_walk(
        a.size(), b.size(), [&](std::size_t r, std::size_t col) { return a[r] + b[col]; },
        [&](std::size_t, std::size_t, double s) {
            out.push_back(s + c);
            return out.size() < k;
        });
    return out;
}

}  // namespace dtri
