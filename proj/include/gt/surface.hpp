#pragma once

#include "gt/brackets.hpp"
#include "gt/cocycles.hpp"

namespace gt {

// Rotation numbers of the boundary curves; the framing enters only through r(z_j) = rot_j + 1.
struct Framing {
    std::vector<int> rot;

    static Framing adapted(int boundaries) { return {std::vector<int>(static_cast<std::size_t>(boundaries), -1)}; }
    // "adapted" or "rot:r1,r2,..."
    static Framing parse(const std::string& text, int boundaries);
    std::string describe() const;
    Rational r_value(int j) const { return Rational(rot.at(static_cast<std::size_t>(j)) + 1); }
};

// Alphabet x1..xg, y1..yg (degree 1), z1..zn (degree 2).
struct SurfaceContext {
    int genus = 0;
    int boundaries = 1;
    int max_degree = 4;
    AlphabetPtr alphabet;

    static SurfaceContext make(int genus, int boundaries, int max_degree);
    SurfaceContext with_max_degree(int N) const { return make(genus, boundaries, N); }

    Letter x(int i) const { return alphabet->index("x" + std::to_string(i)); }
    Letter y(int i) const { return alphabet->index("y" + std::to_string(i)); }
    Letter z(int j) const { return alphabet->index("z" + std::to_string(j)); }
    TensorElement el(Letter l) const { return TensorElement::letter(alphabet, max_degree, l); }
    TensorElement one() const { return TensorElement::unit(alphabet, max_degree); }
    // sum_i [x_i, y_i] + sum_j z_j
    TensorElement omega() const;
};

AlphabetPtr surface_alphabet(int genus, int boundaries);

FoxPairing make_rho_G(const SurfaceContext& ctx);
// q(x_i) = q(y_i) = 0, q(z_j) = rot_j + 1, attached pairing -rho_G
QuasiDerivation make_q_framing(const SurfaceContext& ctx, const Framing& fr);

using LetterPairTable = std::map<std::pair<Letter, Letter>, TensorSquare>;
// {{a, b}} for all generator pairs with a nonzero value, computed from rho_G
LetterPairTable kappa_table(const SurfaceContext& ctx);
// the closed-form table: (x_i,y_i) -> 1(x)1, (y_i,x_i) -> -1(x)1, (z_j,z_j) -> z_j(x)1 - 1(x)z_j
LetterPairTable kappa_reference(const SurfaceContext& ctx);

// left leg reduced to its canonical rotation
TensorSquare project_left_cyclic(const TensorSquare& a);

struct NonGeneratorWord : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// sum_i r(a_i) |1| (x) a_1..^a_i..a_m
//   + sum_{j<k} |k' a_{j+1..k-1}| (x) a_{<j} k'' a_{>k},  k = kappa(a_j, a_k) from the closed-form table
TensorSquare mu_r_oracle(const SurfaceContext& ctx, const Framing& fr, const Word& a);

struct CheckEntry {
    std::string check;
    bool pass = true;
    int degree = 0;
    std::string witness;
};

struct BialgebraReport {
    std::vector<CheckEntry> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// exhaustive over canonical cyclic words of degree 1..degree
BialgebraReport verify_bialgebra(const SurfaceContext& ctx, const Framing& fr, int degree, bool parallel = true);
BialgebraReport verify_bialgebra(const FoxPairing& rho, const QuasiDerivation& q, int degree, bool parallel = true);

struct BernoulliResult {
    std::vector<Rational> coefficients;  // coefficient of omega^k, k = 0..
    TensorElement phi;
    FoxPairing pairing;                  // D(a) phi D(b)
};
// phi = 1/(e^w - 1) - 1/w, from series inversion of (e^t - 1)/t
BernoulliResult bernoulli_phi(const SurfaceContext& ctx, int terms);
// B_0..B_n via sum_{j<=m} C(m+1, j) B_j = 0 (so B_1 = -1/2)
std::vector<Rational> bernoulli_numbers(int n);

struct ConjugationResult {
    FoxPairing rho_h;
    bool commutes = false;
    std::string witness;
};
struct NotGroupLike : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// h(a) = x^-1 a x.  Checks rho(h a, h b) = h(rho(a,b) + rho_h(a,b)) in degrees <= degree; the
// context truncation should be at least degree + 2.
ConjugationResult conjugation_defect(const TensorElement& x, const FoxPairing& rho, int degree);

struct ConjugationMorphism {
    AlgebraMap h;
    FoxDerivative left, right;  // h-twisted
};
// data with mu = q h - h q and tau = h rho - rho (h (x) h), for q in Qder(-rho)
ConjugationMorphism conjugation_morphism(const TensorElement& x, const QuasiDerivation& q, const FoxPairing& rho);

CyclicElement truncate_cyclic(const CyclicElement& a, int degree);

}  // namespace gt
