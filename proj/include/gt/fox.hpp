#pragma once

#include "gt/tensor.hpp"

#include <optional>

namespace gt {

struct IncompleteTable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongSide : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Algebra endomorphism of the tensor algebra fixed by generator images.
class AlgebraMap {
public:
    AlgebraMap() = default;
    explicit AlgebraMap(std::vector<TensorElement> images);
    static AlgebraMap identity(const AlphabetPtr& alpha, int max_degree);

    const std::vector<TensorElement>& images() const { return images_; }
    TensorElement apply(const TensorElement& a) const;
    TensorElement apply_word(const Word& w) const;

private:
    std::vector<TensorElement> images_;
    AlphabetPtr alpha_;
    int N_ = 0;
};

// Left: d(ab) = d(a)eps(b) + f(a)d(b).  Right: d(ab) = d(a)f(b) + eps(a)d(b).
// f is the optional twist (identity when absent).
class FoxDerivative {
public:
    FoxDerivative() = default;
    FoxDerivative(Side side, AlphabetPtr alphabet, int max_degree);
    static FoxDerivative zero(Side side, AlphabetPtr alphabet, int max_degree);
    // D(a) = a - eps(a), both left and right
    static FoxDerivative distinguished(Side side, AlphabetPtr alphabet, int max_degree);

    Side side() const { return side_; }
    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }

    void set(Letter g, TensorElement value);
    bool defined(Letter g) const { return defined_.at(g); }
    const TensorElement& value(Letter g) const;

    void set_twist(AlgebraMap f) { twist_ = std::move(f); }
    const std::optional<AlgebraMap>& twist() const { return twist_; }

    TensorElement eval(const TensorElement& a) const;
    TensorElement eval_word(const Word& w) const;

private:
    Side side_ = Side::Left;
    AlphabetPtr alpha_;
    int N_ = 0;
    std::vector<TensorElement> table_;
    std::vector<bool> defined_;
    std::optional<AlgebraMap> twist_;
};

// Left Fox in the first slot, right Fox in the second.
class FoxPairing {
public:
    FoxPairing() = default;
    FoxPairing(AlphabetPtr alphabet, int max_degree);
    static FoxPairing zero(AlphabetPtr alphabet, int max_degree);

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    std::size_t rank() const { return alpha_->size(); }

    void set(Letter a, Letter b, TensorElement value);
    bool defined(Letter a, Letter b) const { return defined_.at(a * rank() + b); }
    const TensorElement& value(Letter a, Letter b) const;

    // constructed by tau / inner; exactness is never inferred
    bool is_exact() const { return exact_; }
    void mark_exact(bool e = true) { exact_ = e; }

    TensorElement eval(const TensorElement& a, const TensorElement& b) const;
    TensorElement eval_words(const Word& a, const Word& b) const;

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    std::vector<TensorElement> table_;
    std::vector<bool> defined_;
    bool exact_ = false;
};

// q(ab) = q(a)b + aq(b) - sigma(a,b)
class QuasiDerivation {
public:
    QuasiDerivation() = default;
    QuasiDerivation(AlphabetPtr alphabet, int max_degree, FoxPairing sigma);
    static QuasiDerivation zero(AlphabetPtr alphabet, int max_degree);

    const AlphabetPtr& alphabet() const { return alpha_; }
    int max_degree() const { return N_; }
    const FoxPairing& pairing() const { return sigma_; }

    void set(Letter g, TensorElement value);
    bool defined(Letter g) const { return defined_.at(g); }
    const TensorElement& value(Letter g) const;

    bool is_exact() const { return exact_; }
    void mark_exact(bool e = true) { exact_ = e; }

    TensorElement eval(const TensorElement& a) const;
    TensorElement eval_word(const Word& w) const;

private:
    AlphabetPtr alpha_;
    int N_ = 0;
    std::vector<TensorElement> table_;
    std::vector<bool> defined_;
    FoxPairing sigma_;
    bool exact_ = false;
};

// Reference evaluators that unroll the defining Leibniz laws recursively.
TensorElement fox_eval_recursive(const FoxDerivative& d, const TensorElement& a);
TensorElement pairing_eval_recursive(const FoxPairing& rho, const TensorElement& a, const TensorElement& b);
TensorElement qder_eval_recursive(const QuasiDerivation& q, const TensorElement& a);

FoxDerivative transpose_fox(const FoxDerivative& d);
FoxPairing transpose_pairing(const FoxPairing& rho);
QuasiDerivation transpose_qder(const QuasiDerivation& q);

// tau: (a,b) -> dL(a)D(b) + D(a)dR(b)
FoxPairing make_exact_pairing(const FoxDerivative& left, const FoxDerivative& right);
// mu: q = dL + dR, attached pairing +tau(dL, dR)
QuasiDerivation make_exact_qder(const FoxDerivative& left, const FoxDerivative& right);
// (a,b) -> D(a) e D(b)
FoxPairing make_inner_pairing(const TensorElement& e);

// Linear maps that are simultaneously left and right Fox derivatives on all words of
// degree <= N, parametrized by generator values of degree < N.  One table per basis vector.
std::vector<std::vector<TensorElement>> solve_two_sided_derivatives(const AlphabetPtr& alpha, int N);

}  // namespace gt
