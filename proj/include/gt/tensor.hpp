#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gt {

using Rational = mpq_class;
using Letter = std::uint16_t;
using Word = std::vector<Letter>;

struct ContextMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonAugmentedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered generator names with positive weights.  Order fixes canonical forms.
class Alphabet {
public:
    Alphabet(std::vector<std::string> names, std::vector<int> degrees);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    int degree(Letter i) const { return degrees_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int min_degree() const { return min_degree_; }

    // -1 when absent
    int find(const std::string& symbol) const;
    Letter index(const std::string& symbol) const;

    int degree(const Word& w) const;

    bool operator==(const Alphabet& other) const {
        return names_ == other.names_ && degrees_ == other.degrees_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::unordered_map<std::string, Letter> lookup_;
    int min_degree_ = 1;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees);

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

Word concat(const Word& a, const Word& b);
Word reversed(const Word& w);
Word slice(const Word& w, std::size_t from, std::size_t to);

// Truncated element of the free associative algebra.
class TensorElement {
public:
    using Terms = std::map<Word, Rational>;

    TensorElement() = default;
    TensorElement(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {}

    static TensorElement unit(AlphabetPtr alphabet, int max_degree, const Rational& c = 1);
    static TensorElement letter(AlphabetPtr alphabet, int max_degree, Letter l, const Rational& c = 1);
    static TensorElement generator(AlphabetPtr alphabet, int max_degree, const std::string& symbol);
    static TensorElement word(AlphabetPtr alphabet, int max_degree, const Word& w, const Rational& c = 1);

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries so range-for over f().terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Word& w) const;
    // adds c*w, dropping words above the truncation
    void add(const Word& w, const Rational& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Rational& c);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }
    TensorElement operator-() const;

    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    // component of a single weighted degree
    TensorElement homogeneous_part(int d) const;
    TensorElement truncated(int d) const;
    // same terms, new truncation bound (terms above the bound are dropped)
    TensorElement with_max_degree(int N) const;
    int top_degree() const;

    void require_compatible(const TensorElement& o) const;

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    Terms terms_;
};

// Element of A (x) A, indexed by word pairs.
class TensorSquare {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Rational>;

    TensorSquare() = default;
    TensorSquare(AlphabetPtr alphabet, int max_degree) : alpha_(std::move(alphabet)), N_(max_degree) {}

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const Terms& terms() const& { return terms_; }
    // by value on temporaries so range-for over f().terms() stays valid
    Terms terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& a, const Word& b, const Rational& c);
    Rational coeff(const Word& a, const Word& b) const;

    TensorSquare& operator+=(const TensorSquare& o);
    TensorSquare& operator-=(const TensorSquare& o);
    TensorSquare& operator*=(const Rational& c);
    friend TensorSquare operator+(TensorSquare a, const TensorSquare& b) { return a += b; }
    friend TensorSquare operator-(TensorSquare a, const TensorSquare& b) { return a -= b; }
    bool operator==(const TensorSquare& o) const;
    bool operator!=(const TensorSquare& o) const { return !(*this == o); }

    static TensorSquare simple(const TensorElement& a, const TensorElement& b);

    TensorSquare swapped() const;
    // (l (x) r) * (a (x) b) = la (x) rb
    TensorSquare multiply(const TensorSquare& o) const;
    TensorElement left_contract_counit() const;   // (eps (x) id)
    TensorElement right_contract_counit() const;  // (id (x) eps)
    TensorElement multiply_legs() const;          // m(a (x) b) = ab

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    Terms terms_;
};

TensorElement product(const TensorElement& a, const TensorElement& b);
TensorSquare coproduct(const TensorElement& a);
TensorElement antipode(const TensorElement& a);
Rational counit(const TensorElement& a);
TensorElement augmentation_part(const TensorElement& a);  // D(a) = a - eps(a)
TensorElement lie_bracket(const TensorElement& a, const TensorElement& b);
TensorElement exp_truncated(const TensorElement& a);
// inverse of x with eps(x) = 1, via the geometric series in 1 - x
TensorElement inverse_unipotent(const TensorElement& x);
TensorElement power(const TensorElement& a, int k);

bool is_primitive(const TensorElement& a);
bool is_group_like(const TensorElement& a);

// (Delta (x) id) and (id (x) Delta) applied to a square, flattened to triples of words
std::map<std::array<Word, 3>, Rational> coassoc_left(const TensorElement& a);
std::map<std::array<Word, 3>, Rational> coassoc_right(const TensorElement& a);

// all words of weighted degree exactly d (lexicographic order)
std::vector<Word> words_of_degree(const Alphabet& alpha, int d);
std::vector<Word> words_up_to_degree(const Alphabet& alpha, int d);

}  // namespace gt
