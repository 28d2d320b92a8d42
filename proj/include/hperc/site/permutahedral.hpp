#pragma once

#include <cstdint>
#include <vector>

#include "hperc/core/complex.hpp"

namespace hperc {

// Permutahedral lattice (dual root lattice A*_d) modulo m times its basis.
// Sites are integer coordinate vectors c in Z_m^d relative to the basis; the
// basis vectors are the projections of e_0..e_{d-1} onto the zero-sum
// hyperplane of R^{d+1}.
struct PermLattice {
  int d = 0;
  int m = 0;
  std::size_t n = 0;
  // Row i: coordinates of basis vector i in an orthonormal frame of R^d.
  std::vector<std::vector<double>> basis;
  // Facet-neighbor offsets in basis coordinates.
  std::vector<std::vector<int>> offsets;
  // Per-site sorted neighbor indices.
  std::vector<std::vector<std::uint32_t>> neighbors;

  std::vector<int> coords(std::size_t site) const;
  std::size_t index(const std::vector<int>& c) const;  // reduces mod m
};

PermLattice gen_perm_lattice(int d, int m);

// Nerve (clique complex) of the permutahedral tessellation with lower-star
// values from uniform site values. Throws CliqueCountMismatch when simplex
// counts disagree with n * k! * S(d+1, k+1).
FilteredComplex gen_perm_complex(int d, int m, std::uint64_t seed);

// Stirling number of the second kind.
long long stirling2(int n, int k);

// Number of k-faces of the permutahedral tessellation with n sites.
long long perm_face_count(int d, long long n, int k);

// Number of k-simplices of the nerve: n * k! * S(d+1, k+1).
long long perm_simplex_count(int d, long long n, int k);

double expected_ec_perm(int d, double n, double p);

}  // namespace hperc
