#ifndef COUNTCEPTION_OPS_HPP_
#define COUNTCEPTION_OPS_HPP_

#include "countception/tape.hpp"
#include "countception/tensor.hpp"

namespace countception {

enum class RunMode { kTrain, kEval };

/// Per-channel batchnorm state that lives outside the tape: learned scale and
/// shift are tape leaves, but the running statistics are updated as a side
/// effect of training-mode forward.
template <typename T>
struct BatchNormStats {
  Tensor<T> running_mean;  // [C]
  Tensor<T> running_var;   // [C], unbiased convention for the running value

  static BatchNormStats fresh(int64_t channels) {
    BatchNormStats s;
    s.running_mean = Tensor<T>::zeros({channels});
    s.running_var = Tensor<T>::full({channels}, T(1));
    return s;
  }
};

/// Valid cross-correlation over a zero-padded input, stride 1.
/// input [B,Cin,H,W], weight [Cout,Cin,k,k], bias [Cout] (kNone to omit).
/// Output [B,Cout,H-k+1+2p,W-k+1+2p].
template <typename T>
typename Tape<T>::Ref conv2d(Tape<T>& tape, typename Tape<T>::Ref input,
                             typename Tape<T>::Ref weight,
                             typename Tape<T>::Ref bias, int pad);

/// Batch normalization over [B,C,H,W]. Train mode normalizes by batch
/// statistics and updates `stats` in place (momentum-weighted moving
/// average); eval mode applies the running statistics as a per-channel
/// affine map. gamma/beta are [C] tape leaves.
template <typename T>
typename Tape<T>::Ref batchnorm2d(Tape<T>& tape, typename Tape<T>::Ref input,
                                  typename Tape<T>::Ref gamma,
                                  typename Tape<T>::Ref beta,
                                  BatchNormStats<T>& stats, RunMode mode,
                                  T eps, T momentum);

/// x if x >= 0 else slope*x; subgradient at exactly 0 is 1.
template <typename T>
typename Tape<T>::Ref leaky_relu(Tape<T>& tape, typename Tape<T>::Ref input,
                                 T slope);

/// Channel-axis concatenation of [B,Ca,H,W] and [B,Cb,H,W].
template <typename T>
typename Tape<T>::Ref concat_channels(Tape<T>& tape, typename Tape<T>::Ref a,
                                      typename Tape<T>::Ref b);

/// Keeps spatial positions (i*s, j*s) of a [B,C,H,W] tensor, offset (0,0).
template <typename T>
typename Tape<T>::Ref subsample2d(Tape<T>& tape, typename Tape<T>::Ref input,
                                  int stride);

/// Sum of absolute elementwise differences; scalar output. Subgradient of
/// |x| at 0 is taken as 0.
template <typename T>
typename Tape<T>::Ref l1_loss(Tape<T>& tape, typename Tape<T>::Ref pred,
                              typename Tape<T>::Ref target);

/// Off-tape reference convolution (direct quadruple loop). Test oracle and
/// fallback; semantics identical to conv2d's forward.
template <typename T>
Tensor<T> conv2d_naive(const Tensor<T>& input, const Tensor<T>& weight,
                       const Tensor<T>* bias, int pad);

}  // namespace countception

#endif  // COUNTCEPTION_OPS_HPP_
