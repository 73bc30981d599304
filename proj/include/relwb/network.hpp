#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relwb/ca.hpp"
#include "relwb/constructions.hpp"
#include "relwb/report.hpp"

namespace relwb {

inline constexpr std::uint64_t kDefaultNetworkBudget = 1ull << 22;

// Total atom labelling of dim-tuples over a finite node set.
struct Network {
  int dim = 0;
  int nodes = 0;
  std::vector<int> label;  // indexed by lex rank of the tuple

  Network() = default;
  Network(int n, int k);

  std::uint64_t tupleCount() const { return label.size(); }
  std::uint64_t rank(const std::vector<int>& t) const;
  std::vector<int> unrank(std::uint64_t r) const;
  int at(const std::vector<int>& t) const { return label[rank(t)]; }
  void set(const std::vector<int>& t, int atom) { label[rank(t)] = atom; }

  bool operator==(const Network&) const = default;
  bool operator<(const Network& o) const;
};

// Clause 1: repeated coordinates land below the matching diagonal.
// Clause 2: labels of i-variant tuples are cylAcc(i)-related.
// Clause 3 (only when substAcc present): label(t o [i,j]) = s_[ij] label(t).
CheckReport validate_network(const Network& N, const CaAtomStructure& S,
                             int jobs = 0);

// All valid networks on {0..nodes-1}, lexicographic in the label vector.
std::vector<Network> enumerate_networks(
    const CaAtomStructure& S, int nodes,
    std::uint64_t stateBudget = kDefaultNetworkBudget);

// The two-dimensional cylindric view of a relation algebra structure:
// diag(0,1) = identity atoms, cyl(0) joins atoms of 1;a, cyl(1) atoms of
// a;1, substAcc = converse.  Basic matrices over S are then dim-2 networks.
CaAtomStructure ra_to_ca2(const RaAtomStructure& S);

// Network plus Lambda-labels on node sequences of length != dim, up to width.
struct Hypernetwork {
  Network net;
  int width = 0;   // hyperlabelled lengths: 0..width excluding dim
  int lambda = 1;  // hyperlabel alphabet {0..lambda-1}
  std::map<std::vector<int>, int> hyper;

  bool operator==(const Hypernetwork&) const = default;
  bool operator<(const Hypernetwork& o) const;
};

// Wraps a network, hyperlabelling every short/long sequence with label 0.
Hypernetwork hypernetwork_from(const Network& N, int width = -1 /* dim+1 */,
                               int lambda = 1);

// Network clauses on the atom part, totality/range of the hyperlabels, and
// equal labels across tuples whose coordinates pair below diag(0,1).
CheckReport validate_hypernetwork(const Hypernetwork& H,
                                  const CaAtomStructure& S);

// Hyperbasis clauses over a candidate set sharing nodes/width/lambda:
// (i) atom coverage, (ii) cylindrifier witness, (iii) amalgamation, and,
// on request, closure under composition with maps sigma : nodes -> nodes.
CheckReport check_hyperbasis(const CaAtomStructure& S,
                             const std::vector<Hypernetwork>& H, int m, int n,
                             int lambda, bool requireSymmetry = false,
                             std::uint64_t opsBudget = kDefaultNetworkBudget);

// ----- coloured graphs ------------------------------------------------------

struct Colour {
  enum class Kind : unsigned char { GreenPlain, GreenZero, White, Red, Shade };
  Kind kind = Kind::White;
  int i = 0;  // GreenPlain: 1..m-2; GreenZero: tint; White: 0..m-2; Red: low end
  int j = 0;  // Red only: index at the higher node

  static Colour green(int i) { return {Kind::GreenPlain, i, 0}; }
  static Colour greenZero(int tint) { return {Kind::GreenZero, tint, 0}; }
  static Colour white(int i) { return {Kind::White, i, 0}; }
  static Colour red(int lo, int hi) { return {Kind::Red, lo, hi}; }
  static Colour shade() { return {Kind::Shade, 0, 0}; }

  bool isGreen() const {
    return kind == Kind::GreenPlain || kind == Kind::GreenZero;
  }
  bool operator==(const Colour&) const = default;
  auto operator<=>(const Colour&) const = default;
  std::string str() const;
};

// Complete edge-coloured graph with yellow shades on green-free (m-1)-sets.
struct ColouredGraph {
  int m = 0;  // dimension parameter fixing the palette ranges
  int nodes = 0;
  std::map<std::pair<int, int>, Colour> edge;            // (min,max) keys
  std::map<std::vector<int>, std::vector<int>> yellow;   // sorted tuple -> S

  const Colour* colourOf(int a, int b) const;
  void setEdge(int a, int b, Colour c);
};

// Five forbidden families, palette ranges, completeness, yellow totality and
// the no-green condition, and the cone condition.  Red order-preservation is
// judged in the structures' "<".  Shade edges need allowShade.
CheckReport validate_coloured_graph(const ColouredGraph& G,
                                    const PebbleStructure& greens,
                                    const PebbleStructure& reds,
                                    bool allowShade = false);

// Exists's auxiliary data for one extension round.
struct ExtendParams {
  // private-game answer: tint of the new apex's cone -> red index for delta
  std::map<int, int> tintResponse;
  // fallback red clique indices for apexes whose mu is not edge-derivable
  std::map<int, int> nodeIndex;
  bool allowShade = false;
};

struct ExtendResult {
  bool ok = false;
  ColouredGraph graph;    // valid completion when ok
  CheckReport report;     // the obstruction otherwise
};

// One round: Forall supplies the face F, the new node delta = M.nodes, its
// edges to F and optionally yellows for the new tuples inside F u {delta};
// Exists completes every remaining edge by the red/white case analysis and
// colours new green-free (m-1)-sets by the cone-set rule.
ExtendResult extend_coloured_graph(
    const ColouredGraph& M, const std::vector<int>& F, int delta,
    const std::map<int, Colour>& apexEdges, const PebbleStructure& greens,
    const PebbleStructure& reds, const ExtendParams& P,
    const std::map<std::vector<int>, std::vector<int>>& apexYellows = {});

}  // namespace relwb
