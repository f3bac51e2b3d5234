#include "schurcoh/schur_calculus.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schurcoh {

Decomposition::Decomposition(Map terms) : terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

void Decomposition::add(const Weight& w, std::int64_t mult)
{
    if (mult == 0)
        return;
    auto& slot = terms_[w];
    slot += mult;
    if (slot == 0)
        terms_.erase(w);
}

std::int64_t Decomposition::multiplicity(const Weight& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

BigInt Decomposition::dimension() const
{
    BigInt total = 0;
    for (const auto& [w, mult] : terms_)
        total += weyl_dim(w) * BigInt(static_cast<long>(mult));
    return total;
}

Decomposition Decomposition::shifted(int d) const
{
    Map out;
    for (const auto& [w, mult] : terms_)
        out.emplace(w.shifted(d), mult);
    return Decomposition(std::move(out));
}

namespace {

std::vector<int> padded(const Weight& w, int rank)
{
    std::vector<int> out(w.vec());
    while (static_cast<int>(out.size()) < rank)
        out.push_back(0);
    return out;
}

void require_dominant(const Weight& w, const char* what)
{
    if (!w.is_dominant())
        throw std::invalid_argument(std::string(what) + ": weight " + w.str() + " is not dominant");
}

// Row-by-row enumeration of LR fillings. Row r of nu/lambda holds c[j]
// copies of letter j (j = 0..k-1), left to right in increasing order.
class LrEnumerator {
public:
    LrEnumerator(std::vector<int> lambda, std::vector<int> content, int rank)
        : lambda_(std::move(lambda)), content_(std::move(content)), rank_(rank),
          k_(static_cast<int>(content_.size())), placed_(k_, 0), prev_(k_, 0), cur_(k_, 0),
          nu_(rank, 0)
    {
    }

    Decomposition::Map run()
    {
        row(0);
        return std::move(out_);
    }

private:
    void row(int r)
    {
        if (r == rank_) {
            for (int j = 0; j < k_; ++j)
                if (placed_[j] != content_[j])
                    return;
            ++out_[Weight(nu_)];
            return;
        }
        std::fill(cur_.begin(), cur_.end(), 0);
        letter(r, 0, 0);
    }

    void letter(int r, int j, int used)
    {
        if (j == k_) {
            nu_[r] = lambda_[r] + used;
            auto saved_prev = prev_;
            for (int l = 0; l < k_; ++l)
                placed_[l] += cur_[l];
            prev_ = cur_;
            auto saved_cur = cur_;
            row(r + 1);
            cur_ = saved_cur;
            prev_ = saved_prev;
            for (int l = 0; l < k_; ++l)
                placed_[l] -= cur_[l];
            return;
        }
        // remaining content for this letter
        int hi = content_[j] - placed_[j];
        // lattice word: cumulative count of j after this row cannot exceed
        // count of j-1 in rows above
        if (j > 0)
            hi = std::min(hi, placed_[j - 1] - placed_[j]);
        // column strictness against the row above
        if (r > 0) {
            int above_limit = lambda_[r - 1];
            for (int l = 0; l < j; ++l)
                above_limit += prev_[l];
            hi = std::min(hi, above_limit - lambda_[r] - used);
        }
        for (int c = 0; c <= hi; ++c) {
            cur_[j] = c;
            letter(r, j + 1, used + c);
        }
        cur_[j] = 0;
    }

    std::vector<int> lambda_;
    std::vector<int> content_;
    int rank_;
    int k_;
    std::vector<int> placed_;
    std::vector<int> prev_;
    std::vector<int> cur_;
    std::vector<int> nu_;
    Decomposition::Map out_;
};

std::mutex lr_mutex;
std::map<std::tuple<std::vector<int>, std::vector<int>, int>, Decomposition::Map> lr_cache;

std::mutex kostka_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> kostka_cache;

Decomposition::Map lr_nonnegative(const std::vector<int>& lambda, const std::vector<int>& mu, int rank)
{
    auto key = std::make_tuple(lambda, mu, rank);
    {
        std::lock_guard lock(lr_mutex);
        if (auto it = lr_cache.find(key); it != lr_cache.end())
            return it->second;
    }
    std::vector<int> content;
    for (int v : mu)
        if (v > 0)
            content.push_back(v);
    Decomposition::Map result = LrEnumerator(lambda, content, rank).run();
    std::lock_guard lock(lr_mutex);
    lr_cache.emplace(std::move(key), result);
    return result;
}

std::vector<int> trimmed(std::vector<int> v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

std::int64_t kostka_rec(const std::vector<int>& shape, const std::vector<int>& content)
{
    if (content.empty())
        return shape.empty() ? 1 : 0;
    auto key = std::make_pair(shape, content);
    {
        std::lock_guard lock(kostka_mutex);
        if (auto it = kostka_cache.find(key); it != kostka_cache.end())
            return it->second;
    }
    // Remove the boxes holding the largest letter: a horizontal strip of size
    // content.back(), i.e. shape[r+1] <= inner[r] <= shape[r].
    const int strip = content.back();
    std::vector<int> rest(content.begin(), content.end() - 1);
    const int rows = static_cast<int>(shape.size());
    // the largest letter k can only occupy rows 0..k-1
    std::int64_t total = 0;
    if (rows <= static_cast<int>(content.size())) {
        std::vector<int> inner(shape);
        auto recurse = [&](auto&& self, int r, int remaining) -> void {
            if (r == rows) {
                if (remaining == 0)
                    total += kostka_rec(trimmed(inner), rest);
                return;
            }
            const int below = r + 1 < rows ? shape[r + 1] : 0;
            const int max_take = std::min(remaining, shape[r] - below);
            for (int take = 0; take <= max_take; ++take) {
                inner[r] = shape[r] - take;
                self(self, r + 1, remaining - take);
            }
            inner[r] = shape[r];
        };
        recurse(recurse, 0, strip);
    }
    std::lock_guard lock(kostka_mutex);
    kostka_cache.emplace(std::move(key), total);
    return total;
}

} // namespace

Decomposition lr_coefficients(const Weight& lambda, const Weight& mu, int rank)
{
    require_dominant(lambda, "lr_coefficients");
    require_dominant(mu, "lr_coefficients");
    if (rank <= 0)
        throw std::invalid_argument("lr_coefficients: rank must be positive");
    if (static_cast<int>(lambda.size()) > rank || static_cast<int>(mu.size()) > rank)
        throw std::invalid_argument("lr_coefficients: weight longer than rank");

    // Shift each factor to nonnegative; GL-equivariance lets us shift back.
    const int shift_l = std::min(0, lambda.min_entry());
    const int shift_m = std::min(0, mu.min_entry());
    std::vector<int> l = padded(lambda, rank);
    std::vector<int> m = padded(mu, rank);
    if (shift_l < 0 && static_cast<int>(lambda.size()) < rank)
        throw std::invalid_argument("lr_coefficients: negative weights must have full length");
    if (shift_m < 0 && static_cast<int>(mu.size()) < rank)
        throw std::invalid_argument("lr_coefficients: negative weights must have full length");
    for (int& v : l)
        v -= shift_l;
    for (int& v : m)
        v -= shift_m;

    Decomposition::Map result = lr_nonnegative(l, m, rank);
    Decomposition out(std::move(result));
    return (shift_l + shift_m) == 0 ? out : out.shifted(shift_l + shift_m);
}

Decomposition pieri(const Weight& lambda, int m, int rank)
{
    require_dominant(lambda, "pieri");
    if (m < 0)
        throw std::invalid_argument("pieri: negative strip size");
    if (static_cast<int>(lambda.size()) > rank)
        throw std::invalid_argument("pieri: weight longer than rank");
    const int shift = std::min(0, lambda.min_entry());
    std::vector<int> l = padded(lambda, rank);
    for (int& v : l)
        v -= shift;

    Decomposition::Map out;
    std::vector<int> nu(l);
    auto recurse = [&](auto&& self, int r, int remaining) -> void {
        if (r == rank) {
            if (remaining == 0)
                out[Weight(nu).shifted(shift)] = 1;
            return;
        }
        // row 0 is unbounded above; row r may grow up to l[r-1]
        const int cap = r == 0 ? remaining : std::min(remaining, l[r - 1] - l[r]);
        for (int add = 0; add <= cap; ++add) {
            nu[r] = l[r] + add;
            self(self, r + 1, remaining - add);
        }
        nu[r] = l[r];
    };
    recurse(recurse, 0, m);
    return Decomposition(std::move(out));
}

std::int64_t kostka(const Weight& lambda, const Weight& content)
{
    require_dominant(lambda, "kostka");
    if (!lambda.is_nonnegative() || !content.is_nonnegative())
        throw std::invalid_argument("kostka: negative entries");
    if (lambda.total() != content.total())
        return 0;
    std::vector<int> c;
    for (int v : content.entries())
        if (v > 0)
            c.push_back(v);
    return kostka_rec(trimmed(lambda.vec()), c);
}

std::vector<EndSummand> end_decomposition(const CanonicalQPartition& c)
{
    if (c.m < c.t || c.t < c.s || c.s < 0 || c.m < c.t + c.s)
        throw std::invalid_argument("end_decomposition: (m,t,s) is not canonical");
    Decomposition d = lr_coefficients(c.weight(), c.dual_weight(), 4);
    std::vector<EndSummand> out;
    for (auto it = d.terms().rbegin(); it != d.terms().rend(); ++it)
        out.push_back(EndSummand{it->first, -c.m, it->second});
    return out;
}

void clear_schur_caches()
{
    {
        std::lock_guard lock(lr_mutex);
        lr_cache.clear();
    }
    std::lock_guard lock(kostka_mutex);
    kostka_cache.clear();
}

} // namespace schurcoh
