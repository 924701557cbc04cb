// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "rlplan/common.hpp"

namespace rlplan {

// Architecture parameters of a GPT-like transformer plus the byte widths
// needed for memory accounting. No weight tensors are ever materialized;
// everything here is counts and bytes.
struct ModelSpec {
  std::string name;
  Count hidden_size = 0;
  Count intermediate_size = 0;
  Count num_layers = 0;
  Count num_attention_heads = 0;
  Count num_kv_heads = 0;
  Count vocab_size = 0;
  Count max_position_embeddings = 0;
  Bytes param_bytes = 2;
  Bytes grad_bytes = 2;
  // Total across all optimizer state tensors (default: two fp32 moments plus
  // an fp32 master copy).
  Bytes optimizer_bytes_per_param = 12;
  // Actor/reference carry the vocab output head; critic/reward end in a
  // hidden_size -> 1 scalar projection instead.
  bool has_output_head = true;

  Count head_dim() const { return hidden_size / num_attention_heads; }

  // Throws ValidationError if any invariant is violated.
  void validate() const;
};

// Total parameter count. The per-layer block is grouped-query attention
// (q: h^2, o: h^2, k+v: 2*h*head_dim*kv_heads), a gated MLP (3*h*intermediate)
// and two norm vectors. On top of the layers: input embedding, final norm,
// the vocab output embedding iff `include_output_embedding`, and a scalar
// value head (hidden_size params) iff the spec has no vocab head.
Count param_count(const ModelSpec& spec, bool include_output_embedding);

// Parameter count with the model's own head convention: vocab output
// embedding for has_output_head specs, scalar head otherwise.
Count natural_param_count(const ModelSpec& spec);

enum class Phase { Forward, Backward };

// Dense-matmul FLOPs of one full-model pass over `tokens` rows attending to
// `context_len` keys. Counts matmuls only (q/k/v/o projections, the
// per-head score and context matmuls, the gated MLP, and the output head);
// softmax/norm terms are excluded. Backward counts twice the forward.
double flops(const ModelSpec& spec, Phase phase, Count tokens, Count context_len);

// Per-layer matmul FLOPs for one forward pass, same conventions as flops().
double layer_flops_fwd(const ModelSpec& spec, Count tokens, Count context_len);

// 2 * layers * kv_heads * head_dim * batch * seq_len * param_bytes.
Bytes kv_cache_bytes(const ModelSpec& spec, Count batch, Count seq_len);

// vocab * batch * ctx_len * elem_bytes.
Bytes logits_bytes(Count vocab, Count batch, Count ctx_len, Bytes elem_bytes);

struct StaticParamBytes {
  Bytes params = 0;
  Bytes grads = 0;
  Bytes optimizer = 0;
};

// natural_param_count() times each configured byte width.
StaticParamBytes static_param_bytes(const ModelSpec& spec);

}  // namespace rlplan
