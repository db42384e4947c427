#include "glnq/multipoly.hpp"

#include <stdexcept>

namespace glnq {

bool ExponentBox::contains(const std::vector<int>& exponents) const {
  if (exponents.size() != lower.size()) return false;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] < lower[v] || exponents[v] > upper[v]) return false;
  }
  return true;
}

TruncatedMultiPoly::TruncatedMultiPoly(ExponentBox box) : box_(std::move(box)) {
  if (box_.lower.size() != box_.upper.size()) {
    throw std::invalid_argument("exponent box bounds disagree in length");
  }
}

TruncatedMultiPoly TruncatedMultiPoly::one(const ExponentBox& box) {
  return monomial(box, std::vector<int>(box.size(), 0), RatFun(1));
}

TruncatedMultiPoly TruncatedMultiPoly::monomial(const ExponentBox& box,
                                                const std::vector<int>& exponents,
                                                const RatFun& coeff) {
  TruncatedMultiPoly p(box);
  p.add_term(exponents, coeff);
  return p;
}

void TruncatedMultiPoly::add_term(const std::vector<int>& exponents, const RatFun& coeff) {
  if (exponents.size() != box_.size()) {
    throw std::invalid_argument("exponent vector length mismatch");
  }
  if (coeff.is_zero() || !box_.contains(exponents)) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFun TruncatedMultiPoly::coefficient(const std::vector<int>& exponents) const {
  if (!box_.contains(exponents)) {
    throw std::out_of_range("coefficient request outside the truncation box");
  }
  auto it = terms_.find(exponents);
  return it == terms_.end() ? RatFun() : it->second;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator*=(const TruncatedMultiPoly& other) {
  if (other.box_.size() != box_.size()) {
    throw std::invalid_argument("multiplying series over different variable sets");
  }
  std::map<std::vector<int>, RatFun> product;
  std::vector<int> exps(box_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t v = 0; v < exps.size(); ++v) exps[v] = ea[v] + eb[v];
      if (!box_.contains(exps)) continue;
      RatFun c = ca * cb;
      if (c.is_zero()) continue;
      auto [it, inserted] = product.try_emplace(exps, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) product.erase(it);
      }
    }
  }
  terms_ = std::move(product);
  return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator+=(const TruncatedMultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

void TruncatedMultiPoly::prune(const std::function<bool(const std::vector<int>&)>& keep) {
  std::erase_if(terms_, [&keep](const auto& term) { return !keep(term.first); });
}

TruncatedMultiPoly hl_transfer_factor(const ExponentBox& box, std::size_t i, std::size_t j,
                                      int order) {
  TruncatedMultiPoly factor = TruncatedMultiPoly::one(box);
  std::vector<int> exps(box.size(), 0);
  for (int k = 1; k <= order; ++k) {
    exps[i] = -k;
    exps[j] = k;
    factor.add_term(exps, RatFun::q_power(-k) - RatFun::q_power(-k + 1));
  }
  return factor;
}

TruncatedMultiPoly schur_transfer_factor(const ExponentBox& box, std::size_t i, std::size_t j) {
  TruncatedMultiPoly factor = TruncatedMultiPoly::one(box);
  std::vector<int> exps(box.size(), 0);
  exps[i] = -1;
  exps[j] = 1;
  factor.add_term(exps, RatFun(-1));
  return factor;
}

TruncatedMultiPoly hl_vandermonde(const ExponentBox& box, std::size_t rows, int order) {
  TruncatedMultiPoly product = TruncatedMultiPoly::one(box);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < rows; ++j) {
      product *= hl_transfer_factor(box, i, j, order);
    }
  }
  return product;
}

TruncatedMultiPoly schur_vandermonde(const ExponentBox& box, std::size_t rows) {
  TruncatedMultiPoly product = TruncatedMultiPoly::one(box);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < rows; ++j) {
      product *= schur_transfer_factor(box, i, j);
    }
  }
  return product;
}

RatFun staged_coefficient(const ExponentBox& box, const std::vector<TruncatedMultiPoly>& factors,
                          const std::vector<int>& target) {
  const std::size_t vars = box.size();

  // Per-factor exponent ranges, then suffix sums: what the factors from
  // position f onward can still add to each variable.
  std::vector<std::vector<int>> suffix_min(factors.size() + 1, std::vector<int>(vars, 0));
  std::vector<std::vector<int>> suffix_max(factors.size() + 1, std::vector<int>(vars, 0));
  for (std::size_t f = factors.size(); f-- > 0;) {
    std::vector<int> fmin(vars, 0);
    std::vector<int> fmax(vars, 0);
    bool first = true;
    for (const auto& [exps, coeff] : factors[f].terms()) {
      for (std::size_t v = 0; v < vars; ++v) {
        fmin[v] = first ? exps[v] : std::min(fmin[v], exps[v]);
        fmax[v] = first ? exps[v] : std::max(fmax[v], exps[v]);
      }
      first = false;
    }
    for (std::size_t v = 0; v < vars; ++v) {
      suffix_min[f][v] = suffix_min[f + 1][v] + fmin[v];
      suffix_max[f][v] = suffix_max[f + 1][v] + fmax[v];
    }
  }

  TruncatedMultiPoly acc = TruncatedMultiPoly::one(box);
  for (std::size_t f = 0; f < factors.size(); ++f) {
    acc *= factors[f];
    const std::vector<int>& lo = suffix_min[f + 1];
    const std::vector<int>& hi = suffix_max[f + 1];
    acc.prune([&](const std::vector<int>& exps) {
      for (std::size_t v = 0; v < vars; ++v) {
        if (exps[v] + hi[v] < target[v] || exps[v] + lo[v] > target[v]) return false;
      }
      return true;
    });
    if (acc.term_count() == 0) return RatFun();
  }
  return acc.coefficient(target);
}

}  // namespace glnq
