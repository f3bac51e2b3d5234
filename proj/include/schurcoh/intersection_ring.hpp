#pragma once

#include "schurcoh/numeric.hpp"
#include "schurcoh/partitions.hpp"

#include <array>
#include <optional>
#include <string>

namespace schurcoh {

/// Basis of the even rational cohomology of the very general Debarre-Voisin
/// fourfold X that is reached by Chern characters of Schur functors of Q.
/// h = ch_1(Q); point is the class of a point.
enum class Basis : int { one = 0, h, h2, ch2, ch3, point };

inline constexpr int kBasisSize = 6;

/// Complex degree (0..4) of a basis element.
int basis_degree(Basis b);

class RingElement {
public:
    RingElement() = default;

    static RingElement scalar(const Rational& v);
    static RingElement basis(Basis b, const Rational& coeff = 1);

    const Rational& operator[](Basis b) const { return c_[static_cast<std::size_t>(b)]; }
    Rational& operator[](Basis b) { return c_[static_cast<std::size_t>(b)]; }

    /// Homogeneous component of complex degree d.
    RingElement degree_part(int d) const;
    bool is_zero() const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const Rational& k);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const Rational& k) { return a *= k; }
    friend RingElement operator*(const Rational& k, RingElement a) { return a *= k; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);

    bool operator==(const RingElement& o) const;

    /// "4 + h + ch2 + ch3 - 1/4 pt"
    std::string str() const;

private:
    std::array<Rational, kBasisSize> c_{};
};

RingElement ring_mul(const RingElement& a, const RingElement& b);

/// Coefficient of the point class.
Rational integrate(const RingElement& a);

namespace classes {
RingElement h();
RingElement h2();
RingElement ch2();
RingElement ch3();
RingElement point();
/// ch_4(Q) = -point/4
RingElement ch4();
/// c_2(X) = h^2 - 8 ch_2
RingElement c2X();
/// h^vee, defined by h^3 = 66 h^vee; pairs with h to q(h) = 22.
RingElement h_dual();
RingElement todd();
RingElement sqrt_todd();
} // namespace classes

inline constexpr int kBbfSquareH = 22;

/// ch(Sigma_lambda Q) by the splitting principle: the weights of Sigma_lambda
/// C^4 with Kostka multiplicities give a symmetric polynomial in the Chern
/// roots, which is rewritten in power sums p_k = k! ch_k(Q) and evaluated in
/// the ring. lambda may have negative entries.
RingElement ch_oracle(const Weight& lambda);

/// Interpolated polynomials for ch(Sigma_(m,t,s,0) Q), m >= t+s.
///
/// The printed alpha_2 reads "+103t+08s-21"; fitting against ch_oracle gives
/// linear part 103t + 80s (see fit_alpha2_linear), which is what alpha2 uses.
struct ChPolynomials {
    static Rational r(int m, int t, int s);
    static Rational ell(int m, int t, int s);
    static Rational delta(int m, int t, int s);
    static Rational tau(int m, int t, int s);
    static Rational alpha3(int t, int s);
    static Rational alpha2(int t, int s);
    static Rational alpha1(int t, int s);
    static Rational alpha0(int t, int s);
    static Rational xi(int m, int t, int s);
};

/// Coefficients (a, b) of t and s in alpha_2, recovered from ch_oracle at
/// (2,1,0) and (2,1,1).
std::pair<Rational, Rational> fit_alpha2_linear();

/// xi(m,t,s) read off from ch_oracle: ch_4(Sigma_lambda Q) = xi r ch_4(Q).
Rational xi_from_oracle(int m, int t, int s);

RingElement ch_closed(const CanonicalQPartition& c);

/// ch_1^2 - 2 r ch_2 of a Chern character.
RingElement discriminant(const RingElement& ch);

/// x = k c_2(X) for degree-4 x, else nothing.
std::optional<Rational> as_c2X_multiple(const RingElement& x);

/// ch(End(Sigma_lambda Q)) summed over the End decomposition.
RingElement end_character(const Weight& lambda);

/// Degree-8 part of ch(End(Sigma_lambda Q)).
RingElement xi_class(const Weight& lambda);

/// chi(Sigma_lambda Q, Sigma_lambda Q) by Hirzebruch-Riemann-Roch.
/// Throws std::logic_error if the result is not an integer.
BigInt chi_endo(const Weight& lambda);

/// (r, ell, s) with ell = a h.
struct ExtendedMukaiVector {
    Rational r;
    Rational a;
    Rational s;

    RingElement ell() const { return classes::h() * a; }
    /// q(ell) - 2 r s
    Rational q_tilde() const;
    /// Projection of v~ . v~ to the Verbitsky component, as a ring element.
    RingElement verbitsky_square() const;
};

/// ch * sqrt(td)
RingElement mukai_vector(const RingElement& ch);

/// Candidate extended Mukai vector for Sym^m Q; m = 0 gives (1, 0, 5/4) for O_X.
ExtendedMukaiVector sym_mukai_candidate(int m);

struct AtomicityReport {
    CanonicalQPartition canonical;
    BigInt rank;
    BigInt chi;
    Rational chi_over_3r2;
    bool necessary_test = false;
    std::optional<ExtendedMukaiVector> certificate;
    bool certificate_verified = false;
    bool atomic = false;
};

/// Necessary test chi/(3 r^2) in (Q)^2; for (m,0,0,0) also builds and checks
/// the extended Mukai vector certificate. atomic when both hold.
AtomicityReport atomicity_report(const Weight& lambda);

} // namespace schurcoh
