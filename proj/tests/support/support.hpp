#pragma once

// Independent oracles and generators shared by the unit tests and the
// acceptance binary.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "shadow/branching.hpp"
#include "shadow/gleam.hpp"
#include "shadow/smith.hpp"

namespace shadow::testing {

std::string example_path(const std::string& name);
Shadow example(const std::string& name);
/// Every shipped example document, by file stem.
const std::vector<std::string>& corpus_names();

/// Random renaming and reordering of every element, random half-edge, slot
/// and edge-direction changes, random region reference orientations.
Shadow random_relabel(const Shadow& s, std::mt19937& rng);

/// Exhaustive search for a structure-preserving bijection.
bool brute_isomorphic(const Shadow& a, const Shadow& b, bool respect_gleams);

/// Mod-2 gleams by transporting a side choice around every circuit.
std::vector<int> oracle_mod2(const Polyhedron& p);

/// Integer invariant factors from determinantal divisors (gcd of minors).
std::vector<long long> oracle_invariant_factors(const IntMatrix& m);
int oracle_rank_mod2(const IntMatrix& m);

/// All sign vectors over the regions, filtered by a direct check.
std::vector<Branching> oracle_branchings(const Polyhedron& p, BranchingMode mode);

/// A shadow reached from a corpus example by random moves, with random
/// gleams satisfying the parity law and random identifiers.
Shadow random_shadow(std::mt19937& rng, int moves);

/// Per region id: the arcs on its boundary by element id and slot, with the
/// attachments around the vertices they meet. A region whose entry is equal
/// before and after a move was left alone by it.
std::map<std::string, std::vector<std::string>> region_pictures(const Shadow& s);

/// Random gleams of the correct parity.
GleamAssignment random_valid_gleams(const Polyhedron& p, std::mt19937& rng);

}  // namespace shadow::testing
