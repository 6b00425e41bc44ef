#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace regft {

struct AdamWConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.01;
};

// Decoupled weight decay; the learning rate is passed per step so warmup
// schedules stay outside the optimizer.
class AdamW {
public:
    AdamW(std::size_t param_count, AdamWConfig config = {})
        : config_(config), m_(param_count, 0.0), v_(param_count, 0.0) {}

    void step(std::span<double> params, std::span<const double> grad, double lr) {
        ++t_;
        const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
        const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
        for (std::size_t i = 0; i < params.size(); ++i) {
            m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * grad[i];
            v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * grad[i] * grad[i];
            const double mhat = m_[i] / bc1;
            const double vhat = v_[i] / bc2;
            params[i] -= lr * (mhat / (std::sqrt(vhat) + config_.eps) +
                               config_.weight_decay * params[i]);
        }
    }

    long steps_taken() const { return t_; }

private:
    AdamWConfig config_;
    std::vector<double> m_, v_;
    long t_ = 0;
};

}  // namespace regft
