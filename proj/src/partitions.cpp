#include "schurcoh/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace schurcoh {

Weight Weight::dominant(std::vector<int> entries)
{
    Weight w(std::move(entries));
    if (!w.is_dominant())
        throw std::invalid_argument("weight " + w.str() + " is not weakly decreasing");
    return w;
}

bool Weight::is_dominant() const
{
    return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

bool Weight::is_nonnegative() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](int v) { return v >= 0; });
}

long Weight::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

int Weight::min_entry() const
{
    return entries_.empty() ? 0 : *std::min_element(entries_.begin(), entries_.end());
}

Weight Weight::shifted(int d) const
{
    std::vector<int> out(entries_);
    for (int& v : out)
        v += d;
    return Weight(std::move(out));
}

std::string Weight::str() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Weight parse_weight(std::string_view text)
{
    std::vector<int> entries;
    std::size_t pos = 0;
    auto fail = [&]() {
        throw std::invalid_argument("malformed weight string '" + std::string(text) + "'");
    };
    while (true) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (pos < text.size() && text[pos] == '+')
            ++pos;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            fail();
        entries.push_back(value);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (pos == text.size())
            break;
        if (text[pos] != ',')
            fail();
        ++pos;
    }
    return Weight(std::move(entries));
}

CanonicalQPartition canonicalize(const Weight& lambda)
{
    if (lambda.size() != 4)
        throw std::invalid_argument("expected a length-4 weight, got " + lambda.str());
    if (!lambda.is_dominant())
        throw std::invalid_argument("weight " + lambda.str() + " is not weakly decreasing");

    CanonicalQPartition c;
    c.m = lambda[0] - lambda[3];
    c.t = lambda[1] - lambda[3];
    c.s = lambda[2] - lambda[3];
    c.twist = -lambda[3];
    if (c.m < c.t + c.s) {
        const int m = c.m, t = c.t, s = c.s;
        c.t = m - s;
        c.s = m - t;
        c.twist -= m;
        c.dualized = true;
    }
    return c;
}

Weight dual(const Weight& lambda)
{
    std::vector<int> out(lambda.vec().rbegin(), lambda.vec().rend());
    for (int& v : out)
        v = -v;
    return Weight(std::move(out));
}

Weight shifted_dual(const Weight& lambda)
{
    Weight d = dual(lambda);
    return d.empty() ? d : d.shifted(-d[d.size() - 1]);
}

BigInt weyl_dim(const Weight& lambda)
{
    if (!lambda.is_dominant())
        throw std::invalid_argument("weyl_dim: weight " + lambda.str() + " is not dominant");
    const std::size_t n = lambda.size();
    BigInt num = 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            num *= lambda[i] - lambda[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("weyl_dim: non-integral quotient for " + lambda.str());
    return num / den;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace schurcoh
