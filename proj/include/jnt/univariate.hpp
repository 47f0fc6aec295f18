#pragma once

#include <cmath>
#include <type_traits>
#include <utility>

namespace jnt {

/// Signum with the usual convention sign(0) = 0; NaN propagates.
inline double sign(double x) noexcept {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return x == 0.0 ? 0.0 : x; // 0 for +/-0, NaN stays NaN
}

/// A real function of one real variable, as seen by the root finder and
/// friends.  Implement eval(); adapters below wrap plain callables.
class UnivariateFunction {
public:
    virtual ~UnivariateFunction() = default;
    virtual double eval(double x) const = 0;
};

template <class F>
class FunctionAdapter final : public UnivariateFunction {
public:
    explicit FunctionAdapter(F f) : f_(std::move(f)) {}
    double eval(double x) const override { return f_(x); }

private:
    F f_;
};

/// Wrap any double(double) callable as a UnivariateFunction.
template <class F>
FunctionAdapter<std::decay_t<F>> make_function(F&& f) {
    return FunctionAdapter<std::decay_t<F>>(std::forward<F>(f));
}

} // namespace jnt
