#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace dtri {

// The k smallest elements of {a + b + c : a in A, b in B} for sorted A, B,
// +inf-absorbing. Heap-based merge over the sorted-sum matrix.
std::vector<double> k_smallest_combination(const std::vector<double>& a,
                                           const std::vector<double>& b, double c,
                                           std::size_t k);

// Generic frontier walk over the implicit sorted matrix A x B. Visits index
// pairs in nondecreasing f(i,j) order; `emit` returns false to stop early.
// f must be nondecreasing in each index separately.
template <typename Score, typename Emit>
void sorted_matrix_walk(std::size_t rows, std::size_t cols, Score&& f, Emit&& emit) {
    if (rows == 0 || cols == 0) return;
    struct Node {
        double score;
        std::size_t r, c;
    };
    auto cmp = [](const Node& x, const Node& y) { return x.score > y.score; };
    std::priority_queue<Node, std::vector<Node>, decltype(cmp)> heap(cmp);
    std::vector<char> seen(rows * cols, 0);
    auto push = [&](std::size_t r, std::size_t c) {
        if (r >= rows || c >= cols || seen[r * cols + c]) return;
        seen[r * cols + c] = 1;
        heap.push({f(r, c), r, c});
    };
    push(0, 0);
    while (!heap.empty()) {
        Node n = heap.top();
        heap.pop();
        if (!emit(n.r, n.c, n.score)) return;
        push(n.r + 1, n.c);
        push(n.r, n.c + 1);
    }
}

}  // namespace dtri
