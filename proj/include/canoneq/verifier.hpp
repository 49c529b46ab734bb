#ifndef CANONEQ_VERIFIER_HPP
#define CANONEQ_VERIFIER_HPP

#include <string>

#include "canoneq/linalg.hpp"
#include "canoneq/polyring.hpp"

namespace canoneq {

enum class SmoothMode { exact, modular };
enum class SmoothStatus { exact_char0, modular_certified, failed, skipped };

struct VerificationReport {
    std::vector<Rational> hilbert_poly;
    std::string hilbert_str;
    bool genus_ok = false;
    bool degree_ok = false;
    SmoothStatus smooth = SmoothStatus::skipped;
    std::vector<uint64_t> primes;
    std::vector<bool> invariant_under;
    long genus = 0;
    long elapsed_ms = 0;

    bool all_ok() const {
        if (!genus_ok || !degree_ok) return false;
        if (smooth == SmoothStatus::failed) return false;
        for (bool b : invariant_under)
            if (!b) return false;
        return true;
    }
    std::string to_text() const;
};

struct VerifyOptions {
    SmoothMode smooth_mode = SmoothMode::modular;
    int num_primes = 2;
    TermOrder order{OrderKind::grevlex};
    BuchbergerOptions gb{};
    bool check_smooth = true;
    long codim = -1; // default: g - 2
};

/// Groebner basis, leading monomials, Hilbert data of the quotient.
HilbertData verify_hilbert(const std::vector<Poly<Cyclotomic>>& ideal, int nvars,
                           const TermOrder& ord, const BuchbergerOptions& gb = {});

/// True iff the Hilbert polynomial equals (2g-2) t - g + 1.
bool hilbert_is_canonical(const HilbertData& h, long g);

/// Smoothness via the Jacobian criterion: the ideal plus its codim-sized
/// minors must cut out the empty projective set (zero Hilbert polynomial).
/// Exact mode works over Q(zeta); modular mode certifies over >= num_primes
/// primes p = 1 (mod field order) after checking the reduction keeps the
/// Hilbert polynomial (bad primes are discarded).
SmoothStatus verify_smooth(const std::vector<Poly<Cyclotomic>>& ideal, int nvars, long codim,
                           const VerifyOptions& opt, std::vector<uint64_t>* primes_used,
                           uint64_t avoid = 1);

/// Per-map invariance: maps act by substitution x_i -> sum_j M[i][j] x_j
/// (the row/arrow convention of printed maps); each transformed generator
/// must lie in the span of the same-degree part of the ideal.
std::vector<bool> verify_invariance(const std::vector<Poly<Cyclotomic>>& ideal,
                                    const std::vector<Matrix>& maps, int nvars,
                                    const TermOrder& ord);

/// Full verification of a specialized candidate: Hilbert polynomial, genus
/// and degree flags, smoothness, invariance under the given maps.
VerificationReport verify_curve(const std::vector<Poly<Cyclotomic>>& ideal, int nvars, long g,
                                const std::vector<Matrix>& maps, const VerifyOptions& opt,
                                uint64_t avoid = 1);

} // namespace canoneq

#endif
