// SPDX-License-Identifier: Apache-2.0
#include "rlplan/model_arith.hpp"

namespace rlplan {

void ModelSpec::validate() const {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ValidationError("ModelSpec '" + name + "': " + what);
  };
  require(hidden_size > 0, "hidden_size must be positive");
  require(intermediate_size > 0, "intermediate_size must be positive");
  require(num_layers > 0, "num_layers must be positive");
  require(num_attention_heads > 0, "num_attention_heads must be positive");
  require(num_kv_heads > 0, "num_kv_heads must be positive");
  require(vocab_size > 0, "vocab_size must be positive");
  require(max_position_embeddings > 0, "max_position_embeddings must be positive");
  require(hidden_size % num_attention_heads == 0,
          "hidden_size must be divisible by num_attention_heads");
  require(num_attention_heads % num_kv_heads == 0,
          "num_attention_heads must be divisible by num_kv_heads");
  require(param_bytes > 0, "param_bytes must be positive");
  require(grad_bytes > 0, "grad_bytes must be positive");
  require(optimizer_bytes_per_param >= 0, "optimizer_bytes_per_param must be nonnegative");
}

namespace {

Count layer_param_count(const ModelSpec& s) {
  const Count attn = s.hidden_size * s.hidden_size * 2 +              // q, o
                     2 * s.hidden_size * s.head_dim() * s.num_kv_heads;  // k, v
  const Count mlp = 3 * s.hidden_size * s.intermediate_size;
  const Count norms = 2 * s.hidden_size;
  return attn + mlp + norms;
}

}  // namespace

Count param_count(const ModelSpec& spec, bool include_output_embedding) {
  spec.validate();
  Count total = spec.num_layers * layer_param_count(spec);
  total += spec.vocab_size * spec.hidden_size;  // input embedding
  total += spec.hidden_size;                    // final norm
  if (include_output_embedding) total += spec.vocab_size * spec.hidden_size;
  if (!spec.has_output_head) total += spec.hidden_size;  // scalar value head
  return total;
}

Count natural_param_count(const ModelSpec& spec) {
  return param_count(spec, spec.has_output_head);
}

double layer_flops_fwd(const ModelSpec& spec, Count tokens, Count context_len) {
  const double h = static_cast<double>(spec.hidden_size);
  const double macs_per_token =
      h * h                                                      // q projection
      + 2.0 * h * static_cast<double>(spec.head_dim() * spec.num_kv_heads)  // k, v
      + h * h                                                    // o projection
      + 2.0 * h * static_cast<double>(context_len)               // score + context
      + 3.0 * h * static_cast<double>(spec.intermediate_size);   // gated MLP
  return 2.0 * static_cast<double>(tokens) * macs_per_token;
}

double flops(const ModelSpec& spec, Phase phase, Count tokens, Count context_len) {
  spec.validate();
  if (tokens < 0) throw ValidationError("flops: tokens must be nonnegative");
  const double head_cols =
      spec.has_output_head ? static_cast<double>(spec.vocab_size) : 1.0;
  const double fwd =
      static_cast<double>(spec.num_layers) * layer_flops_fwd(spec, tokens, context_len) +
      2.0 * static_cast<double>(tokens) * static_cast<double>(spec.hidden_size) * head_cols;
  return phase == Phase::Forward ? fwd : 2.0 * fwd;
}

Bytes kv_cache_bytes(const ModelSpec& spec, Count batch, Count seq_len) {
  spec.validate();
  if (batch < 0 || seq_len < 0)
    throw ValidationError("kv_cache_bytes: batch and seq_len must be nonnegative");
  return 2 * spec.num_layers * spec.num_kv_heads * spec.head_dim() * batch * seq_len *
         spec.param_bytes;
}

Bytes logits_bytes(Count vocab, Count batch, Count ctx_len, Bytes elem_bytes) {
  if (vocab < 0 || batch < 0 || ctx_len < 0 || elem_bytes < 0)
    throw ValidationError("logits_bytes: all inputs must be nonnegative");
  return vocab * batch * ctx_len * elem_bytes;
}

StaticParamBytes static_param_bytes(const ModelSpec& spec) {
  const Count n = natural_param_count(spec);
  return StaticParamBytes{n * spec.param_bytes, n * spec.grad_bytes,
                          n * spec.optimizer_bytes_per_param};
}

}  // namespace rlplan
