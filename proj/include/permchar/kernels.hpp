#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permchar/group.hpp"

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with identical output; the references stay for testing and
// benchmarking.
namespace permchar::kernels
{

// Number of worker threads used by the parallel kernels (<= 0: runtime default).
void set_threads(int n);
int threads();

// Class-algebra structure constants a(j, i, l) = #{y in C_i : z_l y^-1 in C_j}
// for a fixed z_l in C_l, flattened as [(j * k + i) * k + l].
std::vector<std::uint64_t> structure_constants_serial(const Group &group);
std::vector<std::uint64_t> structure_constants(const Group &group);

// For each probe g, the number of cosets k with coset_of[reps[k] * g] == k.
std::vector<std::uint64_t> fixed_points_serial(const Group &group,
                                               std::span<const std::uint32_t> coset_of,
                                               std::span<const Elem> reps,
                                               std::span<const Elem> probes);
std::vector<std::uint64_t> fixed_points(const Group &group, std::span<const std::uint32_t> coset_of,
                                        std::span<const Elem> reps, std::span<const Elem> probes);

// Elements g with g^-1 h g in the subgroup for every generator h, ascending.
std::vector<Elem> normalizer_serial(const Group &group, std::span<const Elem> gens,
                                    const std::vector<bool> &member);
std::vector<Elem> normalizer(const Group &group, std::span<const Elem> gens,
                             const std::vector<bool> &member);

} // namespace permchar::kernels
