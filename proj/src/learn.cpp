#include "sim/learn.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sim::learn {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

// Parameter layout: W1 row-major (10x2), b1 (10), W2 (10), b2 (1).
constexpr int kW1 = 0;
constexpr int kB1 = kW1 + 2 * TinyNet::kHidden;
constexpr int kW2 = kB1 + TinyNet::kHidden;
constexpr int kB2 = kW2 + TinyNet::kHidden;
static_assert(kB2 + 1 == TinyNet::kParams);

}  // namespace

TinyNet TinyNet::initialized(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> weight(-1.0, 1.0);
    TinyNet net;
    for (double& p : net.params) p = weight(rng);
    return net;
}

double TinyNet::forward(double x1, double x2) const {
    double z_out = params[kB2];
    for (int j = 0; j < kHidden; ++j) {
        const double h =
            sigmoid(params[kW1 + 2 * j] * x1 + params[kW1 + 2 * j + 1] * x2 + params[kB1 + j]);
        z_out += params[kW2 + j] * h;
    }
    return sigmoid(z_out);
}

CirclesDataset make_circles_dataset(int n_train, int n_test, std::uint64_t seed) {
    if (n_train <= 0 || n_test <= 0) throw std::invalid_argument("sample counts must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::normal_distribution<double> radial_noise(0.0, 0.05);

    const auto draw = [&](int label) {
        // Inner radius 0.8 keeps both classes present on each side of the
        // |x1| > 0.5 partition while leaving a clear margin at ~4 sigma.
        const double base_radius = label == 0 ? 0.8 : 1.0;
        const double r = base_radius + radial_noise(rng);
        const double a = angle(rng);
        return Sample{r * std::cos(a), r * std::sin(a), label};
    };

    CirclesDataset data;
    data.train_all.reserve(n_train);
    for (int i = 0; i < n_train; ++i) data.train_all.push_back(draw(i % 2));
    data.test.reserve(n_test);
    for (int i = 0; i < n_test; ++i) data.test.push_back(draw(i % 2));

    for (const Sample& s : data.train_all) {
        if (s.x1 > 0.5) data.train_sat1.push_back(s);
        if (s.x1 < -0.5) data.train_sat2.push_back(s);
    }
    return data;
}

void train_epoch(TinyNet& net, const std::vector<Sample>& samples, double learning_rate,
                 int batch_size, std::mt19937_64& rng) {
    if (samples.empty()) throw std::invalid_argument("cannot train on an empty sample set");
    if (batch_size <= 0) throw std::invalid_argument("batch size must be positive");

    std::vector<std::size_t> order(samples.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::array<double, TinyNet::kParams> grad{};
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
        const std::size_t end = std::min(order.size(), start + batch_size);
        grad.fill(0.0);
        for (std::size_t k = start; k < end; ++k) {
            const Sample& s = samples[order[k]];

            std::array<double, TinyNet::kHidden> hidden;
            double z_out = net.params[kB2];
            for (int j = 0; j < TinyNet::kHidden; ++j) {
                hidden[j] = sigmoid(net.params[kW1 + 2 * j] * s.x1 +
                                    net.params[kW1 + 2 * j + 1] * s.x2 + net.params[kB1 + j]);
                z_out += net.params[kW2 + j] * hidden[j];
            }
            const double p = sigmoid(z_out);

            // BCE with sigmoid output: dL/dz_out = p - y.
            const double delta_out = p - s.label;
            grad[kB2] += delta_out;
            for (int j = 0; j < TinyNet::kHidden; ++j) {
                grad[kW2 + j] += delta_out * hidden[j];
                const double delta_h =
                    delta_out * net.params[kW2 + j] * hidden[j] * (1.0 - hidden[j]);
                grad[kW1 + 2 * j] += delta_h * s.x1;
                grad[kW1 + 2 * j + 1] += delta_h * s.x2;
                grad[kB1 + j] += delta_h;
            }
        }
        const double scale = learning_rate / static_cast<double>(end - start);
        for (int i = 0; i < TinyNet::kParams; ++i) net.params[i] -= scale * grad[i];
    }
}

double accuracy(const TinyNet& net, const std::vector<Sample>& samples) {
    if (samples.empty()) throw std::invalid_argument("cannot score an empty sample set");
    int correct = 0;
    for (const Sample& s : samples) {
        const int predicted = net.forward(s.x1, s.x2) >= 0.5 ? 1 : 0;
        if (predicted == s.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(samples.size());
}

std::vector<std::uint8_t> serialize_params(const TinyNet& net) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(TinyNet::kParams * 4);
    for (double p : net.params) {
        const auto word = std::bit_cast<std::uint32_t>(static_cast<float>(p));
        for (int shift = 0; shift < 32; shift += 8)
            bytes.push_back(static_cast<std::uint8_t>(word >> shift));
    }
    return bytes;
}

TinyNet deserialize_params(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() != TinyNet::kParams * 4)
        throw std::invalid_argument("serialized model must be exactly 164 bytes");
    TinyNet net;
    for (int i = 0; i < TinyNet::kParams; ++i) {
        std::uint32_t word = 0;
        for (int b = 0; b < 4; ++b)
            word |= static_cast<std::uint32_t>(bytes[4 * i + b]) << (8 * b);
        net.params[i] = std::bit_cast<float>(word);
    }
    return net;
}

TinyNet average(const TinyNet& a, const TinyNet& b) {
    TinyNet mean;
    for (int i = 0; i < TinyNet::kParams; ++i) mean.params[i] = 0.5 * (a.params[i] + b.params[i]);
    return mean;
}

}  // namespace sim::learn
