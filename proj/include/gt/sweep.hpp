#pragma once

#include "gt/brackets.hpp"

namespace gt {

// Table kernels with an OpenMP path and a serial reference path.  Both fill the same
// row-major layout and must agree exactly.

// out[i * rights.size() + j] = [|lefts[i]|, |rights[j]|]
std::vector<CyclicElement> bracket_sweep(const LetterBrackets& kappa, const std::vector<Word>& lefts,
                                         const std::vector<Word>& rights, int max_degree, bool parallel);

// out[i] = delta(|words[i]|)
std::vector<CyclicSquare> cobracket_sweep(const Cobracket& delta, const std::vector<Word>& words, bool parallel);

int sweep_threads();

}  // namespace gt
