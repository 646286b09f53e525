#pragma once
#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

namespace kmroots {

using Int = std::int64_t;
using Rat = boost::rational<Int>;
using Vec = std::vector<Int>;
using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

// Cartan matrix entry convention: a_ij = 2 (a_i|a_j) / (a_i|a_i).

// Bourbaki-numbered Cartan matrix for a finite family. Accepts the small
// ranks that only occur as aliases (B2, C1, D3, ...).
IntMatrix finite_cartan(char family, int n);

// Checks diagonal 2, nonpositive off-diagonal, a_ij = 0 <=> a_ji = 0.
bool is_gcm(const IntMatrix& a);

// Squared lengths d_i with d_i a_ij = d_j a_ji; within each connected block
// the largest d_i is scaled to 2. Throws InvalidGCM if not symmetrizable.
std::vector<Rat> symmetrizer(const IntMatrix& a);

// (a_i|a_j) = d_i a_ij / 2.
RatMatrix form_from_cartan(const IntMatrix& a);

// Connected blocks of the diagram, each listed in increasing node order.
std::vector<std::vector<int>> connected_blocks(const IntMatrix& a);

IntMatrix principal_submatrix(const IntMatrix& a, const std::vector<int>& nodes);

Rat dot(const Vec& u, const RatMatrix& form, const Vec& v);

// Exact determinant by fraction-free elimination.
Rat determinant(RatMatrix m);

enum class DefiniteType { finite, affine, indefinite };
// Classifies a connected symmetrizable GCM by its symmetrized form:
// positive definite, positive semidefinite of corank 1, or neither.
DefiniteType classify_connected(const IntMatrix& a);

}  // namespace kmroots
