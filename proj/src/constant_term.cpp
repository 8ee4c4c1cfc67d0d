#include "lgm/constant_term.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_map>

#include "ct_kernels.hpp"
#include "lgm/errors.hpp"

namespace lgm {
namespace {

using detail::CtKernels;

struct SparsePoly {
  std::size_t stride = 0;
  std::vector<std::int32_t> exps;  // n * stride, pad lanes zero
  std::vector<Rational> coeffs;
  std::size_t size() const { return coeffs.size(); }
};

struct ExpsHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : v) h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

using Accum = std::unordered_map<std::vector<std::int32_t>, Rational, ExpsHash>;

SparsePoly from_accum(Accum&& acc, std::size_t stride) {
  std::vector<const std::pair<const std::vector<std::int32_t>, Rational>*> order;
  order.reserve(acc.size());
  for (const auto& kv : acc)
    if (!kv.second.is_zero()) order.push_back(&kv);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->first < b->first; });
  SparsePoly p;
  p.stride = stride;
  p.exps.reserve(order.size() * stride);
  p.coeffs.reserve(order.size());
  for (const auto* kv : order) {
    p.exps.insert(p.exps.end(), kv->first.begin(), kv->first.end());
    p.coeffs.push_back(kv->second);
  }
  return p;
}

// A term of f^m contributes to the constant term of f^j only if `budget`
// = j - m more factors of f can cancel it in every coordinate.
void budget_bounds(const std::vector<std::int32_t>& mins, const std::vector<std::int32_t>& maxs,
                   long budget, std::vector<std::int32_t>& lo, std::vector<std::int32_t>& hi) {
  for (std::size_t c = 0; c < mins.size(); ++c) {
    lo[c] = static_cast<std::int32_t>(-budget * maxs[c]);
    hi[c] = static_cast<std::int32_t>(-budget * mins[c]);
  }
}

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b,
                    const std::vector<std::int32_t>& lo, const std::vector<std::int32_t>& hi,
                    const CtKernels& kernels) {
  const std::size_t stride = a.stride;
  Accum acc;
  std::vector<std::int32_t> sums(b.size() * stride);
  std::vector<std::uint8_t> keep(b.size());
  std::vector<std::int32_t> key(stride);
  for (std::size_t i = 0; i < a.size(); ++i) {
    kernels.add_broadcast(a.exps.data() + i * stride, b.exps.data(), sums.data(), b.size(),
                          stride);
    kernels.filter_bounds(sums.data(), lo.data(), hi.data(), keep.data(), b.size(), stride);
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (!keep[t]) continue;
      key.assign(sums.begin() + t * stride, sums.begin() + (t + 1) * stride);
      auto [it, fresh] = acc.try_emplace(key, a.coeffs[i]);
      if (fresh)
        it->second *= b.coeffs[t];
      else
        it->second += a.coeffs[i] * b.coeffs[t];
    }
  }
  return from_accum(std::move(acc), stride);
}

struct PowerBuilder {
  const SparsePoly& base;
  unsigned j;
  const std::vector<std::int32_t>& mins;
  const std::vector<std::int32_t>& maxs;
  const CtKernels& kernels;
  std::map<unsigned, SparsePoly> memo;

  const SparsePoly& get(unsigned m) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    SparsePoly p;
    std::vector<std::int32_t> lo(base.stride), hi(base.stride);
    budget_bounds(mins, maxs, static_cast<long>(j) - m, lo, hi);
    if (m == 1) {
      Accum acc;
      std::vector<std::uint8_t> keep(base.size());
      kernels.filter_bounds(base.exps.data(), lo.data(), hi.data(), keep.data(), base.size(),
                            base.stride);
      for (std::size_t t = 0; t < base.size(); ++t)
        if (keep[t])
          acc.try_emplace(
              std::vector<std::int32_t>(base.exps.begin() + t * base.stride,
                                        base.exps.begin() + (t + 1) * base.stride),
              base.coeffs[t]);
      p = from_accum(std::move(acc), base.stride);
    } else {
      p = multiply(get(m - m / 2), get(m / 2), lo, hi, kernels);
    }
    return memo.emplace(m, std::move(p)).first->second;
  }
};

}  // namespace

bool ct_avx2_available() { return detail::avx2_supported(); }

Rational constant_term_of_power(const LaurentPolynomial& f, unsigned j, const CtOptions& opts) {
  if (j == 0) return Rational(1);
  if (f.is_zero()) return Rational(0);

  const std::size_t d = f.vars()->size();
  const std::size_t stride = d == 0 ? 8 : (d + 7) / 8 * 8;
  std::vector<std::int32_t> mins(stride, 0), maxs(stride, 0);
  for (std::size_t c = 0; c < d; ++c) {
    std::int32_t mn = f.terms()[0].exps[c], mx = mn;
    for (const auto& t : f.terms()) {
      mn = std::min(mn, t.exps[c]);
      mx = std::max(mx, t.exps[c]);
    }
    mins[c] = mn;
    maxs[c] = mx;
    if (mn > 0 || mx < 0) return Rational(0);  // this coordinate can never cancel
  }

  SparsePoly base;
  base.stride = stride;
  base.exps.assign(f.term_count() * stride, 0);
  base.coeffs.reserve(f.term_count());
  for (std::size_t t = 0; t < f.term_count(); ++t) {
    for (std::size_t c = 0; c < d; ++c)
      base.exps[t * stride + c] = f.terms()[t].exps[c];
    base.coeffs.push_back(f.terms()[t].coeff);
  }

  const CtKernels& kernels = (!opts.force_scalar && detail::avx2_supported())
                                 ? detail::avx2_kernels()
                                 : detail::scalar_kernels();

  PowerBuilder builder{base, j, mins, maxs, kernels, {}};
  const SparsePoly& hi_half = builder.get(j - j / 2);
  const SparsePoly& lo_half = j / 2 == 0 ? hi_half : builder.get(j / 2);

  // Index one half by exponent vector, probe with the negated other half.
  Accum index;
  index.reserve(lo_half.size());
  for (std::size_t t = 0; t < lo_half.size(); ++t)
    index.try_emplace(std::vector<std::int32_t>(lo_half.exps.begin() + t * stride,
                                                lo_half.exps.begin() + (t + 1) * stride),
                      lo_half.coeffs[t]);
  if (j == 1) {
    std::vector<std::int32_t> zero(stride, 0);
    auto it = index.find(zero);
    return it == index.end() ? Rational(0) : it->second;
  }
  Rational total(0);
  std::vector<std::int32_t> neg(stride);
  for (std::size_t t = 0; t < hi_half.size(); ++t) {
    for (std::size_t c = 0; c < stride; ++c) neg[c] = -hi_half.exps[t * stride + c];
    auto it = index.find(neg);
    if (it != index.end()) total += hi_half.coeffs[t] * it->second;
  }
  return total;
}

}  // namespace lgm
