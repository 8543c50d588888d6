#ifndef COUNTCEPTION_TAPE_HPP_
#define COUNTCEPTION_TAPE_HPP_

#include <memory>
#include <stdexcept>
#include <vector>

#include "countception/tensor.hpp"

namespace countception {

/// Reverse-mode tape. Ops append nodes in execution order; backward() walks
/// the record strictly in reverse. Node values are immutable once written.
/// Non-leaf gradient buffers are released as soon as their op has consumed
/// them, which bounds backward peak memory by the forward activations plus a
/// couple of live gradients.
template <typename T>
class Tape {
 public:
  using Ref = int32_t;
  static constexpr Ref kNone = -1;

  class Op {
   public:
    virtual ~Op() = default;
    /// Reads tape.grad(out) and accumulates into the op's input grads.
    virtual void backward(Tape& tape, Ref out) = 0;
  };

  Ref leaf(Tensor<T> value, bool requires_grad = false) {
    return push(std::move(value), requires_grad, nullptr);
  }

  /// Used by op builders. requires_grad is normally the OR of the inputs'.
  Ref record(Tensor<T> value, bool requires_grad, std::unique_ptr<Op> op) {
    return push(std::move(value), requires_grad, std::move(op));
  }

  const Tensor<T>& value(Ref r) const { return node(r).value; }

  bool requires_grad(Ref r) const { return node(r).requires_grad; }

  bool has_grad(Ref r) const { return !node(r).grad.empty(); }

  /// Gradient buffer, zero-initialized on first access. Ops accumulate (+=)
  /// so that fan-out sums naturally.
  Tensor<T>& grad_buffer(Ref r) {
    Node& n = node(r);
    if (n.grad.empty()) n.grad = Tensor<T>::zeros(n.value.shape);
    return n.grad;
  }

  const Tensor<T>& grad(Ref r) const {
    const Node& n = node(r);
    if (n.grad.empty())
      throw std::logic_error("tape: no gradient recorded for node");
    return n.grad;
  }

  /// Seeds d(loss)/d(loss)=1 and runs every recorded op in reverse execution
  /// order. After this call each requires_grad leaf reachable from the loss
  /// holds its gradient.
  void backward(Ref loss) {
    Node& ln = node(loss);
    if (ln.value.numel() != 1)
      throw std::invalid_argument("tape: backward target must be scalar");
    if (!ln.requires_grad)
      throw std::invalid_argument("tape: backward target does not require grad");
    grad_buffer(loss).data[0] = T(1);
    for (Ref i = loss; i >= 0; --i) {
      Node& n = nodes_[static_cast<size_t>(i)];
      if (n.grad.empty()) continue;  // nothing flowed here
      if (n.op) {
        n.op->backward(*this, i);
        n.grad = Tensor<T>();  // consumed; free it
      }
    }
  }

  /// Frees a node's value buffer (inference-time memory trim). The node must
  /// not be needed by any later op's backward.
  void release_value(Ref r) { node(r).value = Tensor<T>(); }

  Ref size() const { return static_cast<Ref>(nodes_.size()); }

  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;
    std::unique_ptr<Op> op;
  };

  Ref push(Tensor<T> value, bool requires_grad, std::unique_ptr<Op> op) {
    nodes_.push_back(Node{std::move(value), Tensor<T>(), requires_grad, std::move(op)});
    return static_cast<Ref>(nodes_.size() - 1);
  }

  Node& node(Ref r) { return nodes_.at(static_cast<size_t>(r)); }
  const Node& node(Ref r) const { return nodes_.at(static_cast<size_t>(r)); }

  std::vector<Node> nodes_;
};

}  // namespace countception

#endif  // COUNTCEPTION_TAPE_HPP_
