#include "gt/sweep.hpp"

#include <omp.h>

namespace gt {

int sweep_threads() { return omp_get_max_threads(); }

std::vector<CyclicElement> bracket_sweep(const LetterBrackets& kappa, const std::vector<Word>& lefts,
                                         const std::vector<Word>& rights, int max_degree, bool parallel) {
    const long rows = static_cast<long>(lefts.size());
    const long cols = static_cast<long>(rights.size());
    std::vector<CyclicElement> out(static_cast<std::size_t>(rows * cols), CyclicElement(kappa.alphabet(), max_degree));
    const Rational one(1);
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (long k = 0; k < rows * cols; ++k) kappa.cyclic_on_words(lefts[k / cols], rights[k % cols], one, out[k]);
    } else {
        for (long k = 0; k < rows * cols; ++k) kappa.cyclic_on_words(lefts[k / cols], rights[k % cols], one, out[k]);
    }
    return out;
}

std::vector<CyclicSquare> cobracket_sweep(const Cobracket& delta, const std::vector<Word>& words, bool parallel) {
    const long n = static_cast<long>(words.size());
    std::vector<CyclicSquare> out(static_cast<std::size_t>(n));
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < n; ++i) out[i] = delta.on_word(words[i]);
    } else {
        for (long i = 0; i < n; ++i) out[i] = delta.on_word(words[i]);
    }
    return out;
}

}  // namespace gt
