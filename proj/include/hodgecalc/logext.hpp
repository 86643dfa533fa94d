#pragma once

#include "hodgecalc/matrix.hpp"

#include <map>

namespace hodgecalc {

class IndexMismatch : public std::runtime_error {
public:
    explicit IndexMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

class TruncationTooShort : public std::runtime_error {
public:
    explicit TruncationTooShort(const std::string& msg) : std::runtime_error(msg) {}
};

class ROutOfRange : public std::runtime_error {
public:
    explicit ROutOfRange(const std::string& msg) : std::runtime_error(msg) {}
};

/// Finite truncation of the log-section module: formal sums of s^k for
/// a <= k < b, s^k standing for log^k / k!.
class LogBlock {
public:
    LogBlock(long a, long b) : a_(a), b_(b), coeffs_(b > a ? b - a : 0) {
        if (a >= b) throw dimension_error("LogBlock: need a < b");
    }
    static LogBlock basis(long a, long b, long k) {
        LogBlock f(a, b);
        f.set(k, Scalar(1));
        return f;
    }

    long lo() const { return a_; }
    long hi() const { return b_; }
    size_t dim() const { return coeffs_.size(); }

    Scalar get(long k) const {
        return (k >= a_ && k < b_) ? coeffs_[k - a_] : Scalar(0);
    }
    void set(long k, const Scalar& v) {
        if (k < a_ || k >= b_) throw dimension_error("LogBlock: degree out of range");
        coeffs_[k - a_] = v;
    }

private:
    long a_, b_;
    std::vector<Scalar> coeffs_;
};

/// <s^i, s^j> = (-1)^j when i + j = -1, else 0, extended bilinearly.
Scalar jab_pairing(const LogBlock& f, const LogBlock& g);

/// Gram matrix of the pairing between the standard bases of two blocks.
Matrix jab_gram(long a1, long b1, long a2, long b2);

/// Element of M_{alpha,p}: levels[k] is the base-space vector attached to
/// the elementary section of log-degree k, 0 <= k <= p.
struct ElementarySection {
    Rational alpha;
    long p = 0;
    std::vector<std::vector<Scalar>> levels; // p + 1 entries

    static ElementarySection zero(Rational alpha, long p, size_t base_dim);
};

/// Log-monodromy on elementary sections: level k picks up nu x_k + x_{k+1}.
ElementarySection apply_log_monodromy(const Matrix& nu, const ElementarySection& x);

struct ExtendedPairing {
    std::map<long, Scalar> by_degree; // coefficient of total log-degree
    Scalar residue;                   // the degree-p coefficient
};

/// Degreewise pairing of two elementary-section elements over the base
/// pairing K; the residue is the top (degree p) coefficient.
ExtendedPairing extend_pairing(const Matrix& K, const ElementarySection& x,
                               const ElementarySection& y);

/// Gram of the descended pairing on the basis m_i (x) e_k of M_{alpha,p}.
Matrix descended_gram(const Matrix& K, long p);

/// The one-variable model with basis t^{n+r}: t and d/dt act on exponents.
struct ToyVModule {
    Rational r;      // in (-1, 0)
    long n_lo, n_hi; // window of integer shifts

    static ToyVModule make(Rational r, long n_lo, long n_hi);
};

/// Companion model at r = 0 (basis t^n, n in window).
struct LaurentModule {
    long n_lo, n_hi;
};

struct ToyGr {
    size_t dim = 0;   // 0 or 1
    Scalar eigenvalue; // of t d/dt when dim = 1
};

/// Gr_alpha of the toy module: one-dimensional iff alpha is in r + Z,
/// with t d/dt acting by -alpha.
ToyGr toy_gr(const Rational& r, const Rational& alpha);

/// Nearby-cycle comparison for a finite model of Gr_alpha: theta is the
/// t d/dt action, whose nilpotent part is nu = theta + alpha. Builds the
/// level-(p) elementary-section ladder and the two transfer maps, and
/// verifies they realize Coker ~ Gr ~ ker of the ladder operator.
struct NearbyIso {
    Matrix ladder;       // nilpotent operator on G^(p+1)
    Matrix into_kernel;  // G -> G^(p+1)
    Matrix from_coker;   // G^(p+1) -> G
    bool kernel_iso = false;
    bool cokernel_iso = false;
};
NearbyIso nearby_iso(const Matrix& theta, const Rational& alpha, long p);

struct CanVar {
    size_t dim_gr_minus1 = 0, dim_gr_0 = 0;
    Matrix can;      // Gr_{-1} -> Gr_0, the -d/dt map
    Matrix var;      // Gr_0 -> Gr_{-1}, the t map
    Matrix var_can;  // on Gr_{-1}
    Matrix can_var;  // on Gr_0
};
CanVar can_var(const ToyVModule& m);
CanVar can_var(const LaurentModule& m);

} // namespace hodgecalc
