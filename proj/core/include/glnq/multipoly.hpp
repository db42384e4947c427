#pragma once

#include <map>
#include <vector>

#include "glnq/ratfun.hpp"

namespace glnq {

/// Per-variable exponent window for truncated multivariate expansion.
/// Exponents may be negative (Laurent-style); anything outside the window
/// is discarded during multiplication.
struct ExponentBox {
  std::vector<int> lower;
  std::vector<int> upper;

  std::size_t size() const { return lower.size(); }
  bool contains(const std::vector<int>& exponents) const;
};

/// Truncated multivariate polynomial over RatFun coefficients, used to
/// expand the rational kernels whose coefficients are character values.
/// Multiplication keeps exactly the terms inside the box, so results are
/// exact for every retained exponent as long as the box is wide enough to
/// hold all intermediate exponents that can still flow back into it;
/// kernel builders pick their boxes accordingly.
class TruncatedMultiPoly {
 public:
  explicit TruncatedMultiPoly(ExponentBox box);

  static TruncatedMultiPoly one(const ExponentBox& box);
  static TruncatedMultiPoly monomial(const ExponentBox& box, const std::vector<int>& exponents,
                                     const RatFun& coeff);

  const ExponentBox& box() const { return box_; }
  std::size_t variable_count() const { return box_.size(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<std::vector<int>, RatFun>& terms() const { return terms_; }

  /// Adds coeff * w^exponents, dropping it silently when outside the box.
  void add_term(const std::vector<int>& exponents, const RatFun& coeff);

  /// Coefficient of w^exponents; throws std::out_of_range when the request
  /// lies outside the box (the truncation makes such coefficients unknown).
  RatFun coefficient(const std::vector<int>& exponents) const;

  /// Drops every term the predicate rejects.
  void prune(const std::function<bool(const std::vector<int>&)>& keep);

  TruncatedMultiPoly& operator*=(const TruncatedMultiPoly& other);
  TruncatedMultiPoly& operator+=(const TruncatedMultiPoly& other);
  friend TruncatedMultiPoly operator*(TruncatedMultiPoly a, const TruncatedMultiPoly& b) {
    return a *= b;
  }
  friend TruncatedMultiPoly operator+(TruncatedMultiPoly a, const TruncatedMultiPoly& b) {
    return a += b;
  }

  friend bool operator==(const TruncatedMultiPoly& a, const TruncatedMultiPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  ExponentBox box_;
  std::map<std::vector<int>, RatFun> terms_;
};

/// (w_i - w_j)/(w_i - q^{-1} w_j) expanded in the region |w_i| > |w_j|:
/// 1 + sum_{k=1..order} (q^{-k} - q^{-k+1}) (w_j/w_i)^k.
TruncatedMultiPoly hl_transfer_factor(const ExponentBox& box, std::size_t i, std::size_t j,
                                      int order);

/// 1 - w_j/w_i, the q -> infinity limit of the factor above.
TruncatedMultiPoly schur_transfer_factor(const ExponentBox& box, std::size_t i, std::size_t j);

/// Product of hl_transfer_factor over all pairs i < j < rows.
TruncatedMultiPoly hl_vandermonde(const ExponentBox& box, std::size_t rows, int order);

/// Product of schur_transfer_factor over all pairs i < j < rows.
TruncatedMultiPoly schur_vandermonde(const ExponentBox& box, std::size_t rows);

/// Coefficient of w^target in the product of the factors, multiplying them
/// in the given order and discarding, after every step, the terms that the
/// remaining factors can no longer steer back to the target. Exact for the
/// requested coefficient and far cheaper than forming the full product.
RatFun staged_coefficient(const ExponentBox& box, const std::vector<TruncatedMultiPoly>& factors,
                          const std::vector<int>& target);

}  // namespace glnq
