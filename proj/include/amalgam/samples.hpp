#pragma once

// Representation corpora and seeded samplers for the examples, the CLI and
// the acceptance suite. Every sampler is deterministic in its seed.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "amalgam/frobplus.hpp"
#include "amalgam/rep.hpp"
#include "amalgam/topo.hpp"

namespace amg::samples {

/// trivial, c2, c3, c4, c6 or s3; throws InputError otherwise.
GroupPtr group(std::string_view name);

/// Uniform over GF(q); integers in [-3, 3] over Q.
Scalar random_scalar(const Field& field, std::mt19937& rng);
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937& rng);
Matrix random_invertible(const Field& field, std::size_t n, std::mt19937& rng);

/// e_x -> e_{g(x)} on k^3.
Representation s3_permutation(const Field& field);
/// 0 -> k(1,1,1) -> k^3 -> k^3 / k(1,1,1) -> 0; split exactly when char != 3.
ShortExactSequence s3_permutation_filtration(const Field& field);

struct NamedRep {
  std::string name;
  Representation rep;
};

/// Representations of dimension <= 3 of trivial, c3 or s3: trivial, sign,
/// permutation, sum-zero and quotient pieces, characters when the field has
/// cube roots of unity, Jordan blocks in characteristic 3, and direct sums.
std::vector<NamedRep> rep_corpus(std::string_view group_name, const Field& field);

/// Gluing triples (V1, V2, c) of the given dimension for a presentation with
/// cyclic factors; V1, V2 are sums of characters (and rotation blocks over
/// Q), conjugated at random, and c is a random H-isomorphism.
std::vector<GluedTriple> sample_triples(const PresentationPtr& p, const Field& field, std::size_t dim,
                                        std::size_t count, unsigned seed);

/// Gluing data on a cover of height-1 pieces: random loop matrices on U1 and
/// U2 and a random gluing extended from the base point, which must lie in the
/// connected, simply connected intersection.
std::vector<GluingData> sample_gluings(const Cover& cover, int base, const Field& field, std::size_t rank,
                                       std::size_t count, unsigned seed);

/// Tuples of random invertible loop matrices.
std::vector<std::vector<Matrix>> sample_loop_tuples(const Field& field, std::size_t generators, std::size_t rank,
                                                    std::size_t count, unsigned seed);

}  // namespace amg::samples
