#include "schurcoh/intersection_ring.hpp"

#include "schurcoh/schur_calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace schurcoh {

int basis_degree(Basis b)
{
    switch (b) {
    case Basis::one: return 0;
    case Basis::h: return 1;
    case Basis::h2:
    case Basis::ch2: return 2;
    case Basis::ch3: return 3;
    case Basis::point: return 4;
    }
    throw std::logic_error("basis_degree: bad basis element");
}

namespace {

constexpr std::array<Basis, kBasisSize> kAllBasis{Basis::one, Basis::h, Basis::h2, Basis::ch2, Basis::ch3, Basis::point};
constexpr std::array<const char*, kBasisSize> kBasisNames{"1", "h", "h^2", "ch2", "ch3", "pt"};

// Product of two basis elements: (coefficient, basis), or nothing if zero.
std::optional<std::pair<Rational, Basis>> basis_product(Basis a, Basis b)
{
    if (a == Basis::one)
        return std::make_pair(Rational(1), b);
    if (b == Basis::one)
        return std::make_pair(Rational(1), a);
    if (static_cast<int>(a) > static_cast<int>(b))
        std::swap(a, b);
    using B = Basis;
    if (a == B::h) {
        switch (b) {
        case B::h: return std::make_pair(Rational(1), B::h2);
        case B::h2: return std::make_pair(Rational(-264), B::ch3);
        case B::ch2: return std::make_pair(Rational(-18), B::ch3);
        case B::ch3: return std::make_pair(Rational(-11, 2), B::point);
        default: return std::nullopt;
        }
    }
    if (a == B::h2 && b == B::h2)
        return std::make_pair(Rational(1452), B::point);
    if (a == B::h2 && b == B::ch2)
        return std::make_pair(Rational(99), B::point);
    if (a == B::ch2 && b == B::ch2)
        return std::make_pair(Rational(15), B::point);
    return std::nullopt;
}

} // namespace

RingElement RingElement::scalar(const Rational& v)
{
    return basis(Basis::one, v);
}

RingElement RingElement::basis(Basis b, const Rational& coeff)
{
    RingElement e;
    e[b] = coeff;
    return e;
}

RingElement RingElement::degree_part(int d) const
{
    RingElement out;
    for (Basis b : kAllBasis)
        if (basis_degree(b) == d)
            out[b] = (*this)[b];
    return out;
}

bool RingElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const Rational& v) { return sgn(v) == 0; });
}

RingElement& RingElement::operator+=(const RingElement& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o)
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

RingElement& RingElement::operator*=(const Rational& k)
{
    for (Rational& v : c_)
        v *= k;
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b)
{
    RingElement out;
    for (Basis x : kAllBasis) {
        if (sgn(a[x]) == 0)
            continue;
        for (Basis y : kAllBasis) {
            if (sgn(b[y]) == 0)
                continue;
            if (auto prod = basis_product(x, y))
                out[prod->second] += prod->first * a[x] * b[y];
        }
    }
    return out;
}

bool RingElement::operator==(const RingElement& o) const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i])
            return false;
    return true;
}

std::string RingElement::str() const
{
    std::ostringstream out;
    bool first = true;
    for (Basis b : kAllBasis) {
        const Rational& v = (*this)[b];
        if (sgn(v) == 0)
            continue;
        Rational mag = abs(v);
        if (!first)
            out << (sgn(v) < 0 ? " - " : " + ");
        else if (sgn(v) < 0)
            out << "-";
        first = false;
        if (b == Basis::one)
            out << to_string(mag);
        else if (mag == 1)
            out << kBasisNames[static_cast<std::size_t>(b)];
        else
            out << to_string(mag) << " " << kBasisNames[static_cast<std::size_t>(b)];
    }
    return first ? "0" : out.str();
}

RingElement ring_mul(const RingElement& a, const RingElement& b)
{
    return a * b;
}

Rational integrate(const RingElement& a)
{
    return a[Basis::point];
}

namespace classes {
RingElement h() { return RingElement::basis(Basis::h); }
RingElement h2() { return RingElement::basis(Basis::h2); }
RingElement ch2() { return RingElement::basis(Basis::ch2); }
RingElement ch3() { return RingElement::basis(Basis::ch3); }
RingElement point() { return RingElement::basis(Basis::point); }
RingElement ch4() { return RingElement::basis(Basis::point, Rational(-1, 4)); }
RingElement c2X() { return h2() - ch2() * Rational(8); }
RingElement h_dual() { return RingElement::basis(Basis::ch3, -4); }
RingElement todd() { return RingElement::scalar(1) + c2X() * Rational(1, 12) + point() * Rational(3); }
RingElement sqrt_todd() { return RingElement::scalar(1) + c2X() * Rational(1, 24) + point() * Rational(25, 32); }
} // namespace classes

// --- splitting principle ---

namespace {

using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int k)
{
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, k, k);
    return out;
}

// Coefficient of x^nu in p_rho(x_1..x_4): ways to send the parts of rho to
// variables so that variable i collects nu_i.
Rational power_sum_monomial(const Partition& rho, const Partition& nu)
{
    std::array<int, 4> target{};
    for (std::size_t i = 0; i < nu.size(); ++i)
        target[i] = nu[i];
    long count = 0;
    std::array<int, 4> acc{};
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == rho.size()) {
            if (acc == target)
                ++count;
            return;
        }
        for (int i = 0; i < 4; ++i) {
            acc[static_cast<std::size_t>(i)] += rho[j];
            self(self, j + 1);
            acc[static_cast<std::size_t>(i)] -= rho[j];
        }
    };
    rec(rec, 0);
    return Rational(count);
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a[pivot][col]) == 0)
            ++pivot;
        if (pivot == n)
            throw std::logic_error("power sum change of basis is singular");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || sgn(a[row][col]) == 0)
                continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

// p_k evaluated in the ring, p_k = k! ch_k(Q).
RingElement power_sum_class(int k)
{
    switch (k) {
    case 1: return classes::h();
    case 2: return classes::ch2() * Rational(2);
    case 3: return classes::ch3() * Rational(6);
    case 4: return classes::ch4() * Rational(24);
    }
    throw std::logic_error("power_sum_class: degree out of range");
}

Rational factorial(int n)
{
    Rational f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

std::mutex oracle_mutex;
std::map<Weight, RingElement> oracle_cache;

RingElement ch_oracle_uncached(const Weight& lambda)
{
    const int shift = -lambda[3];
    const Weight base = lambda.shifted(shift);
    const int size = static_cast<int>(base.total());
    const int top = base[0];

    // weights of Sigma_base C^4 with multiplicities, moved back by -shift
    std::vector<std::pair<std::array<int, 4>, std::int64_t>> weights;
    for (int a = 0; a <= std::min(top, size); ++a)
        for (int b = 0; b <= std::min(top, size - a); ++b)
            for (int c = 0; c <= std::min(top, size - a - b); ++c) {
                const int d = size - a - b - c;
                if (d > top)
                    continue;
                std::vector<int> content{a, b, c, d};
                std::sort(content.begin(), content.end(), std::greater<>());
                const std::int64_t k = kostka(base, Weight(std::move(content)));
                if (k != 0)
                    weights.push_back({{a - shift, b - shift, c - shift, d - shift}, k});
            }

    RingElement out;
    for (int deg = 0; deg <= 4; ++deg) {
        const std::vector<Partition> parts = partitions_of(deg);
        // monomial coefficients of the degree-deg piece of sum exp(w.x)
        std::vector<Rational> mono(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const Partition& nu = parts[j];
            Rational denom = 1;
            for (int e : nu)
                denom *= factorial(e);
            BigInt acc = 0;
            for (const auto& [w, mult] : weights) {
                BigInt term = static_cast<long>(mult);
                for (std::size_t i = 0; i < nu.size(); ++i)
                    for (int e = 0; e < nu[i]; ++e)
                        term *= w[i];
                acc += term;
            }
            mono[j] = Rational(acc) / denom;
        }
        std::vector<std::vector<Rational>> a(parts.size(), std::vector<Rational>(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                a[i][j] = power_sum_monomial(parts[j], parts[i]);
        const std::vector<Rational> coeffs = solve(std::move(a), std::move(mono));
        for (std::size_t j = 0; j < parts.size(); ++j) {
            RingElement term = RingElement::scalar(coeffs[j]);
            for (int k : parts[j])
                term = term * power_sum_class(k);
            out += term;
        }
    }
    return out;
}

} // namespace

RingElement ch_oracle(const Weight& lambda)
{
    if (lambda.size() != 4 || !lambda.is_dominant())
        throw std::invalid_argument("ch_oracle: expected a dominant length-4 weight, got " + lambda.str());
    {
        std::lock_guard lock(oracle_mutex);
        if (auto it = oracle_cache.find(lambda); it != oracle_cache.end())
            return it->second;
    }
    RingElement ch = ch_oracle_uncached(lambda);
    std::lock_guard lock(oracle_mutex);
    oracle_cache.emplace(lambda, ch);
    return ch;
}

// --- interpolated polynomials ---

Rational ChPolynomials::r(int m, int t, int s)
{
    return frac((m + 3) * (t + 2) * (s + 1) * (m - t + 1) * (m - s + 2) * (t - s + 1), 12);
}

Rational ChPolynomials::ell(int m, int t, int s)
{
    return frac(m + t + s, 4);
}

Rational ChPolynomials::delta(int m, int t, int s)
{
    return frac(3 * m * m - 2 * m * t - 2 * m * s + 3 * t * t + 3 * s * s - 2 * t * s + 12 * m + 4 * t - 4 * s, 60);
}

Rational ChPolynomials::tau(int m, int t, int s)
{
    const Rational l = ell(m, t, s);
    return 15 * delta(m, t, s) - 44 * l * l;
}

Rational ChPolynomials::alpha3(int t, int s)
{
    return Rational(-60 * t - 60 * s + 30);
}

Rational ChPolynomials::alpha2(int t, int s)
{
    return Rational(-109 * t * t - 241 * t * s - 109 * s * s + 103 * t + 80 * s - 21);
}

Rational ChPolynomials::alpha1(int t, int s)
{
    const long T = t, S = s;
    return Rational(-60 * T * T * T - 241 * T * T * S - 241 * T * S * S - 60 * S * S * S + 65 * T * T + 78 * T * S +
                    4 * S * S - T + 8 * S + 6);
}

Rational ChPolynomials::alpha0(int t, int s)
{
    const long T = t, S = s;
    return Rational(-10 * T * T * T * T - 60 * T * T * T * S - 109 * T * T * S * S - 60 * T * S * S * S -
                    10 * S * S * S * S + 10 * T * T * T + 19 * T * T * S - 19 * T * S * S - 10 * S * S * S +
                    3 * T * T - 13 * T * S + 3 * S * S + 14 * T - 14 * S);
}

Rational ChPolynomials::xi(int m, int t, int s)
{
    const Rational M = m;
    return (-10 * M * M * M * M + alpha3(t, s) * M * M * M + alpha2(t, s) * M * M + alpha1(t, s) * M +
            alpha0(t, s)) /
           20;
}

Rational xi_from_oracle(int m, int t, int s)
{
    const RingElement ch = ch_oracle(Weight{m, t, s, 0});
    // ch_4 = xi r ch_4(Q) and ch_4(Q) = -pt/4
    return -4 * ch[Basis::point] / ch[Basis::one];
}

std::pair<Rational, Rational> fit_alpha2_linear()
{
    // alpha2 m^2 = 20 xi + 10 m^4 - alpha3 m^3 - alpha1 m - alpha0, at m = 2
    auto alpha2_at = [](int t, int s) -> Rational {
        const int m = 2;
        const Rational rest = 20 * xi_from_oracle(m, t, s) + 10 * m * m * m * m - ChPolynomials::alpha3(t, s) * m * m * m -
                              ChPolynomials::alpha1(t, s) * m - ChPolynomials::alpha0(t, s);
        return rest / (m * m);
    };
    auto quadratic = [](int t, int s) -> Rational { return Rational(-109 * t * t - 241 * t * s - 109 * s * s - 21); };
    const Rational a = alpha2_at(1, 0) - quadratic(1, 0);
    const Rational b = alpha2_at(1, 1) - quadratic(1, 1) - a;
    return {a, b};
}

RingElement ch_closed(const CanonicalQPartition& c)
{
    using P = ChPolynomials;
    const Rational r = P::r(c.m, c.t, c.s);
    const Rational l = P::ell(c.m, c.t, c.s);
    const Rational d = P::delta(c.m, c.t, c.s);
    RingElement out = RingElement::scalar(r);
    out += classes::h() * (l * r);
    out += classes::ch2() * (d * r) + classes::h2() * ((l * l - d / 4) * r / 2);
    out += classes::ch3() * (P::tau(c.m, c.t, c.s) * l * r);
    out += classes::ch4() * (P::xi(c.m, c.t, c.s) * r);
    return out;
}

RingElement discriminant(const RingElement& ch)
{
    const RingElement c1 = ch.degree_part(1);
    return (c1 * c1 - ch.degree_part(2) * (2 * ch[Basis::one])).degree_part(2);
}

std::optional<Rational> as_c2X_multiple(const RingElement& x)
{
    if (!(x == x.degree_part(2)))
        return std::nullopt;
    const Rational k = x[Basis::h2];
    if (x[Basis::ch2] != -8 * k)
        return std::nullopt;
    return k;
}

RingElement end_character(const Weight& lambda)
{
    const CanonicalQPartition c = canonicalize(lambda);
    RingElement out;
    for (const EndSummand& e : end_decomposition(c))
        out += ch_oracle(e.q_weight.shifted(e.twist)) * Rational(static_cast<long>(e.multiplicity));
    return out;
}

RingElement xi_class(const Weight& lambda)
{
    return end_character(lambda).degree_part(4);
}

BigInt chi_endo(const Weight& lambda)
{
    const Rational chi = integrate(end_character(lambda) * classes::todd());
    if (chi.get_den() != 1)
        throw std::logic_error("chi_endo: non-integral Euler characteristic " + to_string(chi) + " for " + lambda.str());
    return chi.get_num();
}

// --- Mukai vectors and atomicity ---

Rational ExtendedMukaiVector::q_tilde() const
{
    return kBbfSquareH * a * a - 2 * r * s;
}

RingElement ExtendedMukaiVector::verbitsky_square() const
{
    const RingElement l = ell();
    RingElement out = RingElement::scalar(r);
    out += l;
    out += (l * l - classes::c2X() * (q_tilde() / 30)) * (1 / (2 * r));
    out += classes::h_dual() * (s / r * a);
    out += classes::point() * (s * s / (2 * r));
    return out;
}

RingElement mukai_vector(const RingElement& ch)
{
    return ch * classes::sqrt_todd();
}

ExtendedMukaiVector sym_mukai_candidate(int m)
{
    const Rational r = weyl_dim(Weight{m, 0, 0, 0});
    return ExtendedMukaiVector{r, frac(m, 4) * r, frac(2 * m * m - 3 * m + 5, 4) * r};
}

AtomicityReport atomicity_report(const Weight& lambda)
{
    AtomicityReport rep;
    rep.canonical = canonicalize(lambda);
    const CanonicalQPartition& c = rep.canonical;
    rep.rank = weyl_dim(c.weight());
    rep.chi = chi_endo(c.weight());
    rep.chi_over_3r2 = Rational(rep.chi) / (3 * Rational(rep.rank * rep.rank));
    rep.necessary_test = is_rational_square(rep.chi_over_3r2);
    if (c.t == 0 && c.s == 0) {
        rep.certificate = sym_mukai_candidate(c.m);
        rep.certificate_verified = rep.certificate->verbitsky_square() == mukai_vector(ch_oracle(c.weight()));
    }
    rep.atomic = rep.necessary_test && rep.certificate_verified;
    return rep;
}

} // namespace schurcoh
