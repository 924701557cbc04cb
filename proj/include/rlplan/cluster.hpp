// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <string>
#include <vector>

#include "rlplan/common.hpp"

namespace rlplan {

// Homogeneous cluster of n_nodes hosts with gpus_per_node devices each.
// Bandwidths are scalar per link class; no topology graph is modeled.
struct ClusterSpec {
  int n_nodes = 1;
  int gpus_per_node = 1;
  Bytes mem_per_device = 0;
  double intra_node_bw = 0;      // bytes/s
  double inter_node_bw = 0;      // bytes/s
  double host_to_device_bw = 0;  // bytes/s

  int device_count() const { return n_nodes * gpus_per_node; }
  void validate() const;
};

// A 2D grid of GPUs: either whole contiguous hosts, or an offset-aligned
// slice of a single host whose size divides gpus_per_node.
struct DeviceMesh {
  int node_offset = 0;
  int node_count = 1;
  int gpu_offset = 0;
  int gpu_count = 1;

  int size() const { return node_count * gpu_count; }
  bool operator==(const DeviceMesh&) const = default;

  // Ascending global device indices covered by the mesh.
  std::vector<DeviceId> devices(const ClusterSpec& cluster) const;
  DeviceId first_device(const ClusterSpec& cluster) const;
  bool contains(const ClusterSpec& cluster, DeviceId d) const;
};

// Throws ValidationError if the mesh violates the shape rules or falls
// outside the cluster.
void validate_mesh(const DeviceMesh& mesh, const ClusterSpec& cluster);

// All valid meshes, ordered by (size, node_offset, gpu_offset). The set
// tiles the cluster: every mesh has a disjoint complement covering the rest.
std::vector<DeviceMesh> enumerate_meshes(const ClusterSpec& cluster);

bool overlap(const DeviceMesh& a, const DeviceMesh& b, const ClusterSpec& cluster);

// Point-to-point bandwidth between two devices; a == b yields the local
// sentinel (infinite bandwidth, zero transfer time).
double link_bandwidth(const ClusterSpec& cluster, DeviceId a, DeviceId b);

inline double local_bandwidth() { return std::numeric_limits<double>::infinity(); }

// Plan-file rendering: "trainer[01-16]" for whole-host meshes, "trainer01"
// for a single host, "trainer01:gpu[0-3]" / "trainer01:gpu2" for sub-node
// slices. Node numbering is 1-based.
std::string mesh_to_string(const DeviceMesh& mesh, const ClusterSpec& cluster);
DeviceMesh mesh_from_string(const std::string& text, const ClusterSpec& cluster);

}  // namespace rlplan
