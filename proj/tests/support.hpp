#pragma once

#include "gt/fox.hpp"
#include "gt/io.hpp"

#include <random>

namespace gt::testing {

// small random element: up to `terms` words of degree <= max_word_degree, coefficients in [-3, 3]
inline TensorElement random_element(std::mt19937& rng, const AlphabetPtr& al, int N, int max_word_degree, int terms,
                                    bool allow_rational = false) {
    std::vector<Word> pool = words_up_to_degree(*al, max_word_degree);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), den(1, 4);
    TensorElement e(al, N);
    for (int i = 0; i < terms; ++i) {
        Rational c(coeff(rng));
        if (allow_rational) c /= den(rng);
        c.canonicalize();
        e.add(pool[pick(rng)], c);
    }
    return e;
}

// table values: combinations of 1 and the generators
inline FoxDerivative random_fox(std::mt19937& rng, Side side, const AlphabetPtr& al, int N) {
    FoxDerivative d(side, al, N);
    for (Letter g = 0; g < al->size(); ++g) d.set(g, random_element(rng, al, N, 1, 3));
    return d;
}

inline FoxPairing random_pairing(std::mt19937& rng, const AlphabetPtr& al, int N) {
    FoxPairing p(al, N);
    for (Letter a = 0; a < al->size(); ++a)
        for (Letter b = 0; b < al->size(); ++b) p.set(a, b, random_element(rng, al, N, 1, 2));
    return p;
}

inline QuasiDerivation random_qder(std::mt19937& rng, const FoxPairing& sigma) {
    QuasiDerivation q(sigma.alphabet(), sigma.max_degree(), sigma);
    for (Letter g = 0; g < sigma.alphabet()->size(); ++g)
        q.set(g, random_element(rng, sigma.alphabet(), sigma.max_degree(), 1, 2));
    return q;
}

inline AlphabetPtr letters(int n, int degree = 1) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return make_alphabet(names, std::vector<int>(static_cast<std::size_t>(n), degree));
}

}  // namespace gt::testing
