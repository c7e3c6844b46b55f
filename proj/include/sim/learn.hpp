/**
 * A deliberately small learning stack for the decentralized-learning
 * scenario: a 2-10-1 dense network, a two-circles toy dataset, plain
 * minibatch SGD, and elementwise parameter averaging.
 */
#ifndef SIM_LEARN_HPP
#define SIM_LEARN_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace sim::learn {

/**
 * 2->10 dense layer (weights + bias) and 10->1 dense layer (weights +
 * bias); 41 parameters total, sigmoid activation on both layers.
 * Parameters are held as doubles; transfers quantize to 32-bit floats,
 * so a serialized model is 41 x 32 = 1312 bits.
 */
struct TinyNet {
    static constexpr int kHidden = 10;
    static constexpr int kParams = 41;
    static constexpr int kSerializedBits = kParams * 32;

    std::array<double, kParams> params{};

    static TinyNet initialized(std::uint64_t seed);

    /** Probability of the positive class. */
    double forward(double x1, double x2) const;
};

struct Sample {
    double x1{};
    double x2{};
    int label{};  // 0 inner circle, 1 outer circle
};

/**
 * Two concentric noisy circles, split into a heterogeneous two-party
 * training partition (by first feature) and a shared test set.
 */
struct CirclesDataset {
    std::vector<Sample> train_all;
    std::vector<Sample> train_sat1;  // x1 > 0.5
    std::vector<Sample> train_sat2;  // x1 < -0.5
    std::vector<Sample> test;
};

CirclesDataset make_circles_dataset(int n_train = 4166, int n_test = 3300,
                                    std::uint64_t seed = 0);

/** One shuffled minibatch-SGD epoch with binary cross-entropy loss. */
void train_epoch(TinyNet& net, const std::vector<Sample>& samples, double learning_rate,
                 int batch_size, std::mt19937_64& rng);

double accuracy(const TinyNet& net, const std::vector<Sample>& samples);

/** Round-trips every parameter through IEEE-754 binary32 (164 bytes). */
std::vector<std::uint8_t> serialize_params(const TinyNet& net);
TinyNet deserialize_params(const std::vector<std::uint8_t>& bytes);

/** Federated averaging: elementwise parameter mean. */
TinyNet average(const TinyNet& a, const TinyNet& b);

}  // namespace sim::learn

#endif  // SIM_LEARN_HPP
