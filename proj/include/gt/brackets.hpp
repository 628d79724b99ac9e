#pragma once

#include "gt/cyclic.hpp"
#include "gt/fox.hpp"

namespace gt {

// {{a,b}} = b' S(rho(a'',b'')') a' (x) rho(a'',b'')'' by direct Sweedler expansion
TensorSquare double_bracket(const FoxPairing& rho, const TensorElement& a, const TensorElement& b);

// Double bracket values on letter pairs, used by the Leibniz-form kernels.
class LetterBrackets {
public:
    struct Term {
        Word left, right;
        Rational coeff;
    };

    explicit LetterBrackets(const FoxPairing& rho);

    const AlphabetPtr& alphabet() const { return alpha_; }
    const std::vector<Term>& terms(Letter a, Letter b) const { return table_[a * alpha_->size() + b]; }
    TensorSquare value(Letter a, Letter b, int max_degree) const;

    // {{a,b}} on words: sum_{i,j} b_{<j} k' a_{>i} (x) a_{<i} k'' b_{>j}, k = {{a_i, b_j}}
    TensorSquare on_words(const Word& a, const Word& b, int max_degree) const;
    // |m({{a,b}})| for words, written into out with the given scale
    void cyclic_on_words(const Word& a, const Word& b, const Rational& scale, CyclicElement& out) const;

private:
    AlphabetPtr alpha_;
    std::vector<std::vector<Term>> table_;
};

// Leibniz-form double bracket on arbitrary elements (bilinear extension of on_words)
TensorSquare double_bracket_fast(const FoxPairing& rho, const TensorElement& a, const TensorElement& b);

// [|a|, |b|] computed from the stored lifts
CyclicElement bracket_cyclic(const FoxPairing& rho, const CyclicElement& a, const CyclicElement& b);
CyclicElement bracket_cyclic(const LetterBrackets& kappa, const CyclicElement& a, const CyclicElement& b);
// same, lifting arbitrary tensor representatives
CyclicElement bracket_of_lifts(const FoxPairing& rho, const TensorElement& a, const TensorElement& b);

// d_q(a) = a' S(q(a'')') (x) q(a'')''
TensorSquare dq_map(const QuasiDerivation& q, const TensorElement& a);

// delta_q = (|.| (x) |.|)(d_q + P d_{q^t}); precomputes q^t once
class Cobracket {
public:
    explicit Cobracket(QuasiDerivation q);

    const QuasiDerivation& qder() const { return q_; }
    const QuasiDerivation& transposed() const { return qt_; }

    CyclicSquare on_word(const Word& w) const;
    CyclicSquare on_lift(const TensorElement& a) const;
    CyclicSquare operator()(const CyclicElement& a) const;

private:
    QuasiDerivation q_;
    QuasiDerivation qt_;
};

CyclicSquare cobracket_cyclic(const QuasiDerivation& q, const CyclicElement& a);
CyclicSquare cobracket_of_lift(const QuasiDerivation& q, const TensorElement& a);

}  // namespace gt
