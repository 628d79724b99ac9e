#pragma once

#include "gt/fox.hpp"

#include <functional>

namespace gt {

struct IncompatiblePair : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x (+) y in L (+) L, both legs primitive tensor elements
struct PairElement {
    TensorElement left, right;
};

// ((x (+) y), m) in (L (+) L) x_c M with M = UL
struct ExtensionElement {
    TensorElement left, right, tail;
    bool is_zero() const { return left.is_zero() && right.is_zero() && tail.is_zero(); }
    bool operator==(const ExtensionElement& o) const {
        return left == o.left && right == o.right && tail == o.tail;
    }
};

PairElement pair_bracket(const PairElement& u, const PairElement& v);
// (x (+) y) . a = xa - ay
TensorElement pair_action(const PairElement& u, const TensorElement& a);

struct CheckResult {
    bool ok = true;
    std::string witness;  // empty when ok
    explicit operator bool() const { return ok; }
};

// omega : L -> M on Lie elements, c : (L (+) L)^2 -> M alternating
struct RelativeCocycle {
    AlphabetPtr alphabet;
    int max_degree = 0;
    std::function<TensorElement(const TensorElement&)> omega;
    std::function<TensorElement(const PairElement&, const PairElement&)> c;
};

// c_rho(v, w) = rho(v1, w2) - rho(w1, v2)
TensorElement c_rho(const FoxPairing& rho, const PairElement& v, const PairElement& w);

// probes q in Qder(-rho) on all word pairs of degree <= probe_degree, then builds omega_q (+) c_rho
RelativeCocycle e_functor(const QuasiDerivation& q, const FoxPairing& rho, int probe_degree);

// dc = 0 on triples and d(omega) + Delta^* c = 0 on pairs, over the Lyndon basis of the free Lie
// algebra up to the given total degree
CheckResult check_relative_closed(const RelativeCocycle& z, int degree);

ExtensionElement extension_bracket(const std::function<TensorElement(const PairElement&, const PairElement&)>& c,
                                   const ExtensionElement& u, const ExtensionElement& v);

// Jacobi on triples of basis elements (x (+) 0, 0), (0 (+) x, 0), (0, w) with x Lyndon and w a
// word, the tail counted in degree deg w + 2; triples of total degree <= degree (<= truncation)
CheckResult check_extension_jacobi(const FoxPairing& rho, int degree);
CheckResult check_extension_jacobi(
    const std::function<TensorElement(const PairElement&, const PairElement&)>& c, const AlphabetPtr& alpha,
    int max_degree, int degree);

// mu(dL (+) dR) = q2 f - f q and tau(dL (+) dR) = f rho - rho2 (f (x) f); dL, dR are f-twisted.
// Compared in degrees <= degree on words of degree <= degree.
CheckResult check_fox_morphism(const AlgebraMap& f, const FoxDerivative& dL, const FoxDerivative& dR,
                               const QuasiDerivation& q, const FoxPairing& rho, const QuasiDerivation& q2,
                               const FoxPairing& rho2, int degree);

}  // namespace gt
