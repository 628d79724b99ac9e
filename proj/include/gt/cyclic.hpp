#pragma once

#include "gt/tensor.hpp"

namespace gt {

// least rotation of w in lexicographic order of letter indices
Word canonical_rotation(const Word& w);

// Element of |A| = A / [A, A], stored on canonical rotations.
class CyclicElement {
public:
    using Terms = std::map<Word, Rational>;

    CyclicElement() = default;
    CyclicElement(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {}

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries so range-for over f().terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    // w need not be canonical
    void add(const Word& w, const Rational& c);
    // w must already be canonical
    void add_canonical(const Word& w, const Rational& c);
    Rational coeff(const Word& w) const;

    CyclicElement& operator+=(const CyclicElement& o);
    CyclicElement& operator-=(const CyclicElement& o);
    CyclicElement& operator*=(const Rational& c);
    friend CyclicElement operator+(CyclicElement a, const CyclicElement& b) { return a += b; }
    friend CyclicElement operator-(CyclicElement a, const CyclicElement& b) { return a -= b; }
    CyclicElement operator-() const;
    bool operator==(const CyclicElement& o) const;
    bool operator!=(const CyclicElement& o) const { return !(*this == o); }

    // the tensor element sum c_w w over the stored representatives
    TensorElement lift() const;

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    Terms terms_;
};

// Element of |A| (x) |A|.
class CyclicSquare {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Rational>;

    CyclicSquare() = default;
    CyclicSquare(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {}

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries so range-for over f().terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& a, const Word& b, const Rational& c);
    void add_canonical(const Word& a, const Word& b, const Rational& c);
    Rational coeff(const Word& a, const Word& b) const;

    CyclicSquare& operator+=(const CyclicSquare& o);
    CyclicSquare& operator-=(const CyclicSquare& o);
    CyclicSquare& operator*=(const Rational& c);
    friend CyclicSquare operator+(CyclicSquare a, const CyclicSquare& b) { return a += b; }
    friend CyclicSquare operator-(CyclicSquare a, const CyclicSquare& b) { return a -= b; }
    bool operator==(const CyclicSquare& o) const;
    bool operator!=(const CyclicSquare& o) const { return !(*this == o); }

    CyclicSquare swapped() const;

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    Terms terms_;
};

CyclicElement cyclic_project(const TensorElement& a);
CyclicSquare cyclic_square_project(const TensorSquare& a);

// canonical cyclic words of weighted degree exactly d / between 1 and d
std::vector<Word> cyclic_words_of_degree(const Alphabet& alpha, int d);
std::vector<Word> cyclic_words_up_to_degree(const Alphabet& alpha, int d);

}  // namespace gt
