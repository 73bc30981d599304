#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "relwb/ca.hpp"
#include "relwb/constructions.hpp"
#include "relwb/network.hpp"
#include "relwb/ra.hpp"

namespace relwb {

inline constexpr std::uint64_t kDefaultGameBudget = 1ull << 21;

enum class EfMode { Forth, BackAndForth };
enum class Winner { Exists, Forall };

std::string winner_name(Winner w);
Winner winner_from_name(const std::string& s);

struct GameOutcome {
  Winner winner = Winner::Exists;
  // solver positions evaluated plus candidate-enumeration nodes
  std::uint64_t statesExplored = 0;
  // for the winner: canonical position -> move (Forall), or canonical
  // position + "|" + Forall move -> reply (Exists); states are kept in
  // canonical form throughout, so replays are reproducible
  std::map<std::string, std::string> strategy;
  std::vector<std::string> trace;  // one optimal play
};

// pebble forth / back-and-forth game on two finite structures. forth mode:
// Forall places on unoccupied elements of A only and the placed pairs must
// form a partial homomorphism A -> B; backAndForth: either side, partial
// isomorphism. Pebble pairs may be picked up and reused.
GameOutcome solve_ef(const PebbleStructure& A, const PebbleStructure& B,
                     int pebbles, int rounds, EfMode mode,
                     std::uint64_t stateBudget = kDefaultGameBudget);

// cylindrifier game on networks over S with at most nodeCap nodes: round 0
// an atom move, later rounds cylindrifier demands; at the node cap Forall
// deletes a node (with reuse he may delete and demand in the same round).
GameOutcome solve_ca_game(const CaAtomStructure& S, int nodeCap, int rounds,
                          bool reuse,
                          std::uint64_t stateBudget = kDefaultGameBudget);

// triangle-move atomic game on relation-algebra networks
GameOutcome solve_ra_game(const RaAtomStructure& S, int nodeCap, int rounds,
                          std::uint64_t stateBudget = kDefaultGameBudget);

// adversarial replay: true iff the stored strategy never lets the declared
// winner reach a loss, against every legal sequence of opposing moves
bool verify_ef_strategy(const GameOutcome& out, const PebbleStructure& A,
                        const PebbleStructure& B, int pebbles, int rounds,
                        EfMode mode);
bool verify_ca_strategy(const GameOutcome& out, const CaAtomStructure& S,
                        int nodeCap, int rounds, bool reuse);
bool verify_ra_strategy(const GameOutcome& out, const RaAtomStructure& S,
                        int nodeCap, int rounds);

}  // namespace relwb
