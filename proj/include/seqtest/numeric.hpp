#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <vector>

namespace seqtest {

// Cached log-factorials: table(i) = log(i!). One allocation, then O(1) lookups.
class LogFactorials {
public:
    explicit LogFactorials(int n_max);
    double operator()(int i) const { return table_[static_cast<size_t>(i)]; }
    // log C(n,s)
    double log_binom(int n, int s) const {
        return table_[static_cast<size_t>(n)] - table_[static_cast<size_t>(s)] -
               table_[static_cast<size_t>(n - s)];
    }
    int n_max() const { return static_cast<int>(table_.size()) - 1; }

private:
    std::vector<double> table_;
};

// log(sum_i exp(x_i)); returns -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> x);

// Running power-of-two rescaling for probability-domain stage vectors.
// A vector v with scale M represents true values v[s] * exp(M). Rescaling by
// exact powers of two introduces no rounding.
struct StageScale {
    double log_scale = 0.0;

    // Shift rows down so that exp(x_max - log_scale) cannot overflow.
    void raise_to(double x_max, std::initializer_list<std::span<double>> rows);
    // Shift rows up when their magnitude has decayed, to avoid losing range.
    // Returns the max magnitude seen (for finiteness checks).
    double rebalance(std::initializer_list<std::span<double>> rows);
    // exp(x - log_scale), the scaled representation of exp(x).
    double scaled_exp(double x) const { return std::exp(x - log_scale); }
    // True value of a stored entry.
    double unscale(double v) const { return v * std::exp(log_scale); }
};

} // namespace seqtest
