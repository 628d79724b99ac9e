#pragma once

#include "gt/tensor.hpp"

#include <mutex>

namespace gt {

struct NotALieElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_lyndon(const Word& w);

// Lyndon words of weighted degree exactly d, lexicographic
std::vector<Word> lyndon_words(const Alphabet& alpha, int d);

// (u, v) with w = uv and v the longest proper Lyndon suffix; w must be Lyndon of length >= 2
std::pair<Word, Word> standard_factorization(const Word& w);

// Expands standard bracketings of Lyndon words into the tensor algebra.  Thread-safe.
class LyndonExpander {
public:
    LyndonExpander(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {}

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }

    TensorElement expand(const Word& lyndon) const;

    // coordinates of a Lie element in the standard Lyndon basis
    std::map<Word, Rational> coordinates(const TensorElement& lie) const;

    TensorElement from_coordinates(const std::map<Word, Rational>& coords) const;

private:
    AlphabetPtr alpha_;
    int N_;
    mutable std::mutex mu_;
    mutable std::map<Word, TensorElement> memo_;
};

// The standard bracketing of a Lyndon word as a tensor element.
TensorElement lyndon_bracketing(const AlphabetPtr& alpha, int max_degree, const Word& w);

// Degreewise dimensions of the free Lie algebra, index 0..dmax, from the generating
// function identity prod_d (1 - t^d)^{-dim_d} = 1 / (1 - sum_i t^{deg_i}).
std::vector<long long> free_lie_dimensions(const Alphabet& alpha, int dmax);

// Apply a bracket-compatible evaluation to a Lyndon word via its standard bracketing.
template <class T, class GenFn, class BracketFn>
T evaluate_lyndon(const Word& w, GenFn&& gen, BracketFn&& br, std::map<Word, T>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    T value;
    if (w.size() == 1) {
        value = gen(w[0]);
    } else {
        auto [u, v] = standard_factorization(w);
        T a = evaluate_lyndon<T>(u, gen, br, memo);
        T b = evaluate_lyndon<T>(v, gen, br, memo);
        value = br(a, b);
    }
    memo.emplace(w, value);
    return value;
}

}  // namespace gt
