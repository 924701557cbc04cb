// SPDX-License-Identifier: Apache-2.0
#include "rlplan/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <utility>

namespace rlplan {

void ClusterSpec::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string("ClusterSpec: ") + what);
  };
  require(n_nodes >= 1, "n_nodes must be >= 1");
  require(gpus_per_node >= 1, "gpus_per_node must be >= 1");
  require(mem_per_device > 0, "mem_per_device must be positive");
  require(intra_node_bw > 0, "intra_node_bw must be positive");
  require(inter_node_bw > 0, "inter_node_bw must be positive");
  require(host_to_device_bw > 0, "host_to_device_bw must be positive");
}

std::vector<DeviceId> DeviceMesh::devices(const ClusterSpec& cluster) const {
  std::vector<DeviceId> out;
  out.reserve(static_cast<size_t>(size()));
  for (int n = node_offset; n < node_offset + node_count; ++n)
    for (int g = gpu_offset; g < gpu_offset + gpu_count; ++g)
      out.push_back(n * cluster.gpus_per_node + g);
  return out;
}

DeviceId DeviceMesh::first_device(const ClusterSpec& cluster) const {
  return node_offset * cluster.gpus_per_node + gpu_offset;
}

bool DeviceMesh::contains(const ClusterSpec& cluster, DeviceId d) const {
  const int node = d / cluster.gpus_per_node;
  const int gpu = d % cluster.gpus_per_node;
  return node >= node_offset && node < node_offset + node_count &&
         gpu >= gpu_offset && gpu < gpu_offset + gpu_count;
}

void validate_mesh(const DeviceMesh& mesh, const ClusterSpec& cluster) {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ValidationError(std::string("DeviceMesh: ") + what);
  };
  const int M = cluster.gpus_per_node;
  require(mesh.node_count >= 1 && mesh.gpu_count >= 1, "mesh must be nonempty");
  require(mesh.node_offset >= 0 && mesh.gpu_offset >= 0, "offsets must be nonnegative");
  require(mesh.node_offset + mesh.node_count <= cluster.n_nodes,
          "mesh exceeds cluster node range");
  require(mesh.gpu_offset + mesh.gpu_count <= M, "mesh exceeds per-node gpu range");
  if (mesh.gpu_count == M) {
    require(mesh.gpu_offset == 0, "whole-host mesh must start at gpu 0");
  } else {
    require(mesh.node_count == 1, "sub-node mesh must cover exactly one node");
    require(M % mesh.gpu_count == 0, "sub-node mesh size must divide gpus_per_node");
    require(mesh.gpu_offset % mesh.gpu_count == 0,
            "sub-node mesh offset must be aligned to its size");
  }
}

std::vector<DeviceMesh> enumerate_meshes(const ClusterSpec& cluster) {
  cluster.validate();
  const int M = cluster.gpus_per_node;
  std::vector<DeviceMesh> out;
  // Aligned sub-node slices.
  for (int c = 1; c < M; ++c) {
    if (M % c != 0) continue;
    for (int n = 0; n < cluster.n_nodes; ++n)
      for (int o = 0; o + c <= M; o += c)
        out.push_back(DeviceMesh{n, 1, o, c});
  }
  // Contiguous whole-host intervals.
  for (int nc = 1; nc <= cluster.n_nodes; ++nc)
    for (int no = 0; no + nc <= cluster.n_nodes; ++no)
      out.push_back(DeviceMesh{no, nc, 0, M});
  std::sort(out.begin(), out.end(), [](const DeviceMesh& a, const DeviceMesh& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.node_offset != b.node_offset) return a.node_offset < b.node_offset;
    return a.gpu_offset < b.gpu_offset;
  });
  return out;
}

bool overlap(const DeviceMesh& a, const DeviceMesh& b, const ClusterSpec& cluster) {
  const bool nodes_meet = a.node_offset < b.node_offset + b.node_count &&
                          b.node_offset < a.node_offset + a.node_count;
  if (!nodes_meet) return false;
  (void)cluster;
  return a.gpu_offset < b.gpu_offset + b.gpu_count &&
         b.gpu_offset < a.gpu_offset + a.gpu_count;
}

double link_bandwidth(const ClusterSpec& cluster, DeviceId a, DeviceId b) {
  if (a < 0 || b < 0 || a >= cluster.device_count() || b >= cluster.device_count())
    throw ValidationError("link_bandwidth: device index out of range");
  if (a == b) return local_bandwidth();
  return a / cluster.gpus_per_node == b / cluster.gpus_per_node ? cluster.intra_node_bw
                                                                : cluster.inter_node_bw;
}

std::string mesh_to_string(const DeviceMesh& mesh, const ClusterSpec& cluster) {
  char buf[64];
  if (mesh.gpu_count == cluster.gpus_per_node) {
    if (mesh.node_count == 1) {
      std::snprintf(buf, sizeof(buf), "trainer%02d", mesh.node_offset + 1);
    } else {
      std::snprintf(buf, sizeof(buf), "trainer[%02d-%02d]", mesh.node_offset + 1,
                    mesh.node_offset + mesh.node_count);
    }
    return buf;
  }
  if (mesh.gpu_count == 1) {
    std::snprintf(buf, sizeof(buf), "trainer%02d:gpu%d", mesh.node_offset + 1,
                  mesh.gpu_offset);
  } else {
    std::snprintf(buf, sizeof(buf), "trainer%02d:gpu[%d-%d]", mesh.node_offset + 1,
                  mesh.gpu_offset, mesh.gpu_offset + mesh.gpu_count - 1);
  }
  return buf;
}

namespace {

// Parses "7" or "[3-9]" starting at text[pos]; returns {lo, hi} inclusive.
std::pair<int, int> parse_interval(const std::string& text, size_t& pos) {
  auto parse_int = [&]() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ValidationError("mesh string: expected a number in '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  if (pos < text.size() && text[pos] == '[') {
    ++pos;
    int lo = parse_int();
    if (pos >= text.size() || text[pos] != '-')
      throw ValidationError("mesh string: expected '-' in '" + text + "'");
    ++pos;
    int hi = parse_int();
    if (pos >= text.size() || text[pos] != ']')
      throw ValidationError("mesh string: expected ']' in '" + text + "'");
    ++pos;
    return {lo, hi};
  }
  int v = parse_int();
  return {v, v};
}

}  // namespace

DeviceMesh mesh_from_string(const std::string& text, const ClusterSpec& cluster) {
  const std::string prefix = "trainer";
  if (text.rfind(prefix, 0) != 0)
    throw ValidationError("mesh string must start with 'trainer': '" + text + "'");
  size_t pos = prefix.size();
  auto [node_lo, node_hi] = parse_interval(text, pos);
  DeviceMesh mesh;
  mesh.node_offset = node_lo - 1;
  mesh.node_count = node_hi - node_lo + 1;
  mesh.gpu_offset = 0;
  mesh.gpu_count = cluster.gpus_per_node;
  if (pos < text.size()) {
    const std::string gpu_prefix = ":gpu";
    if (text.compare(pos, gpu_prefix.size(), gpu_prefix) != 0)
      throw ValidationError("mesh string: unexpected suffix in '" + text + "'");
    pos += gpu_prefix.size();
    auto [gpu_lo, gpu_hi] = parse_interval(text, pos);
    mesh.gpu_offset = gpu_lo;
    mesh.gpu_count = gpu_hi - gpu_lo + 1;
  }
  if (pos != text.size())
    throw ValidationError("mesh string: trailing characters in '" + text + "'");
  validate_mesh(mesh, cluster);
  return mesh;
}

}  // namespace rlplan
