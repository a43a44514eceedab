#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace ecoroute {

// Two stacked LSTM layers (hidden2 == 0 leaves a single layer) followed by a
// linear readout of the last hidden state.
struct LstmShape {
    int n_features = 1;
    int hidden1 = 32;
    int hidden2 = 16;

    friend bool operator==(const LstmShape &, const LstmShape &) = default;
};

// Offsets into the flat parameter vector. Gate rows are ordered
// input, forget, cell candidate, output.
struct LstmLayout {
    explicit LstmLayout(const LstmShape &shape);

    struct Layer {
        int in = 0, hidden = 0;
        std::size_t w = 0, u = 0, b = 0; // W: 4H x in, U: 4H x H, b: 4H (row-major)
    };
    std::vector<Layer> layers;
    std::size_t readout_w = 0; // H_last
    std::size_t readout_b = 0;
    std::size_t size = 0;
};

template <typename T> T sigmoid(T x) { return T(1) / (T(1) + std::exp(-x)); }

// Forward pass over `n_steps` rows of `input` (row-major, n_steps x n_features).
// Templated on the scalar so a higher-precision evaluation is available.
template <typename T>
T lstm_forward(const LstmShape &shape, std::span<const T> params, std::span<const double> input, int n_steps) {
    const LstmLayout layout(shape);
    std::vector<T> x(input.begin(), input.end());
    int in_dim = shape.n_features;
    for (const auto &layer : layout.layers) {
        const int H = layer.hidden;
        std::vector<T> h(H, T(0)), c(H, T(0)), z(4 * H), out(static_cast<std::size_t>(n_steps) * H);
        for (int t = 0; t < n_steps; ++t) {
            const T *xt = x.data() + static_cast<std::size_t>(t) * in_dim;
            for (int r = 0; r < 4 * H; ++r) {
                T acc = params[layer.b + r];
                const T *wr = params.data() + layer.w + static_cast<std::size_t>(r) * in_dim;
                for (int j = 0; j < in_dim; ++j)
                    acc += wr[j] * xt[j];
                const T *ur = params.data() + layer.u + static_cast<std::size_t>(r) * H;
                for (int j = 0; j < H; ++j)
                    acc += ur[j] * h[j];
                z[r] = acc;
            }
            for (int j = 0; j < H; ++j) {
                const T ig = sigmoid(z[j]);
                const T fg = sigmoid(z[H + j]);
                const T gg = std::tanh(z[2 * H + j]);
                const T og = sigmoid(z[3 * H + j]);
                c[j] = fg * c[j] + ig * gg;
                h[j] = og * std::tanh(c[j]);
                out[static_cast<std::size_t>(t) * H + j] = h[j];
            }
        }
        x = std::move(out);
        in_dim = H;
    }
    T y = params[layout.readout_b];
    const T *last = x.data() + static_cast<std::size_t>(n_steps - 1) * in_dim;
    for (int j = 0; j < in_dim; ++j)
        y += params[layout.readout_w + j] * last[j];
    return y;
}

// Forward pass plus backpropagation through time. `output_gradient` maps the
// network output y to dL/dy; `grad` accumulates dL/d(params). Returns y.
double lstm_forward_backward(const LstmShape &shape, std::span<const double> params,
                             std::span<const double> input, int n_steps,
                             const std::function<double(double)> &output_gradient, std::span<double> grad);

// Xavier-uniform weights, zero biases except forget gates (1.0).
std::vector<double> lstm_init(const LstmShape &shape, std::uint64_t seed);

} // namespace ecoroute
