#pragma once

// Full-group scans over PGL(3,q) or PSL(3,q) without materializing the
// group. Elements are streamed in a fixed order: row 0 runs over the
// normalized nonzero vectors, rows 1 and 2 over all vectors completing an
// invertible matrix (for PSL, with cube determinant).
//
// Each operation has a parallel kernel and a serial reference written
// independently on top of Pgl3; both must agree exactly.

#include "mobius3/pgl.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace mobius3 {

enum class ScanMode { Serial, Parallel };

/// hint > 0 wins, then MOBIUS3_THREADS, then the OpenMP default.
int resolve_threads(int hint = 0);

struct ScanOptions {
  ScanMode mode = ScanMode::Parallel;
  int threads = 0;
};

/// Calls f(mat) for every element of the full group, serially.
void for_each_element(const Pgl3& ctx, GroupKind kind, const std::function<void(const Mat3&)>& f);

/// Number of elements visited by a scan; equals the group order.
std::uint64_t count_elements(const Pgl3& ctx, GroupKind kind, const ScanOptions& opt = {});

/// |N_G(h)| where G is the full group of the given kind.
std::uint64_t normalizer_order(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, const ScanOptions& opt = {});

/// N_G(h) as a subgroup record; throws TooLarge when it exceeds cap.
SubgroupRec normalizer_full(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, std::size_t cap,
                            const ScanOptions& opt = {});

/// For each k in ks: #{g in G : g^-1 h g <= k}. At most 64 targets.
std::vector<std::uint64_t> transporter_counts(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h,
                                              const std::vector<const SubgroupRec*>& ks, const ScanOptions& opt = {});

/// Number of conjugates of k containing h: transporter count / n_k, exact.
std::uint64_t count_conjugates_containing(const Pgl3& ctx, GroupKind kind, const SubgroupRec& h, const SubgroupRec& k,
                                          std::uint64_t n_k, const ScanOptions& opt = {});

}  // namespace mobius3
