// Top-level classification drivers: golden-table loading, involution
// construction per table row, fixed-subalgebra typing (restricted-root and
// algebra labels), inner/outer class enumeration, normal-form enumeration
// from the extended diagram, witness replay, and the table regeneration
// checks consumed by the CLI and the test suite.
#pragma once

#include "lie/glie.hpp"
#include "lie/invol.hpp"
#include "lie/normal_forms.hpp"
#include "lie/torsion.hpp"

#include <string>
#include <vector>

namespace lie {

// ------------------------------------------------------------ type labels --

// Parses a printed algebra/type label into a TypeLabel: Cartan letters
// ("D8", "A3+A3+A1+R^2", parenthesized groups), classical names ("su(8)",
// "so(16)", "sp(4)", "u(5)", "s(u(4)+u(4))") and lowercase exceptional
// names ("e7+su(2)", "f4").  Comparison should go through .canonical().
TypeLabel parse_type_label(const std::string& s);

// --------------------------------------------------------------- coweights --

// Exact-rational coweight expressions: signed sums of K_j with optional
// rational coefficients, e.g. "K1+K4", "1/2*K3 + K6", "-3K6+4K7".  The
// bare string "-" denotes zero.  Whitespace-insensitive; '*' optional.
RatVec parse_coweight_expr(const std::string& s, int rank);
std::string coweight_str(const RatVec& h);

// ------------------------------------------------------------- golden data --

struct GoldenRow {
  std::string base;   // "-", "tau1".."tau4", "tau3phi", "phi", "psi"
  std::string twist;  // coweight expression or "-"
  std::string k;      // printed type of g^tau
  std::string hk;     // printed type of h cap g^tau
};

struct GoldenBlock {
  SimpleType g;
  int node = 0;
  std::string h_label;
  std::vector<GoldenRow> rows;

  // Diff key: "E7:4", with "-phi"/"-psi" appended for the outer blocks.
  std::string key() const;
  bool outer() const;  // base of the rows is phi/psi
};

// Tables 2-5, 7, 8 from data/golden/tableN.tsv.
const std::vector<GoldenBlock>& golden_table(int n);

struct Table1Row {
  SimpleType g;
  int node = 0;
  int sign = 0;
  std::string form;  // normal-form id in normal_forms.hpp
};
const std::vector<Table1Row>& golden_table1();

struct Table6Row {
  SimpleType g;        // ambient complex type
  int node = 0;        // ambient simple root carrying the gradation
  std::string h_label;
  std::string Pi;      // restricted fundamental system (Satake label)
  int alpha = 0;       // printed ambient node (equals node)
  std::string form;    // real-form label
  std::string k;       // maximal compact subalgebra of the real form
  std::string hk;      // h cap k
};
const std::vector<Table6Row>& golden_table6();

// Whitelist of printed cells the engine recomputes differently (attributed
// typos); the diff layer reports these as flagged, never as matches.
struct Discrepancy {
  int table = 0;
  std::string block;    // GoldenBlock::key() / "<g>:<node>" for table 6
  std::string rowkey;   // "<base>/<twist>" / real-form label for table 6
  std::string column;   // "k", "hk", "form"
  std::string paper;
  std::string computed;
};
const std::vector<Discrepancy>& discrepancies();

// ------------------------------------------------- involutions from rows ---

// The involution a golden row denotes: base "-" gives the torsion tau_h of
// the twist; otherwise the named base involution composed with the twist
// torsion (half-integer twists allowed; the composite is checked to be an
// involution).
RootAut base_involution(const Chevalley& ch, const std::string& base);
RootAut row_involution(const Chevalley& ch, const GoldenRow& row);

// ------------------------------------------------------------ subalgebras --

// Root ids of Delta_h, the fixed system of sigma = tau_{(1/2)K_node}.
const std::vector<int>& delta_h_ids(const RootSystem& rs, int node_1based);

// Type of g^tau for an involution tau (symmetric-subalgebra catalog).
TypeLabel k_type(const RootAut& tau);

// dim(h cap g^tau), h = g^sigma (Cartan contained in h).
int hk_dim(const RootAut& tau, int node_1based);

// Restricted-root type of h cap g^tau on t_+ (Cartan-letter label with an
// R^k center, as printed in Tables 2-4).  Requires tau(Delta_h) = Delta_h.
TypeLabel hk_sigma_type(const RootAut& tau, int node_1based);

// Algebra label of h cap g^tau (per-component fixed subalgebras, as
// printed in Tables 5, 7, 8).
TypeLabel hk_algebra_type(const RootAut& tau, int node_1based);

// -------------------------------------------------------------- named maps --

// Root-lattice automorphisms used by the paper's conjugation arguments:
// "phi" (E7), "psi" (E6), "nu" (E8), "mu1" (E6).  The coweight matrix also
// accepts "<name>_inv".
const RatMat& named_root_matrix(SimpleType g, const std::string& name);
RatMat named_coweight_matrix(SimpleType g, const std::string& name);

// ----------------------------------------------------------- enumerations --

// Conjugation moves valid for the pair (sigma, .): Weyl words w (length 1
// or 2) whose root action preserves Delta_h and maps K_node to +-K_node
// modulo 4, deduplicated by root action, plus the applicable named maps.
struct ConjMoves {
  std::vector<WeylWord> words;        // representative words
  std::vector<RatMat> word_cmats;     // their coweight matrices
  std::vector<std::string> named;     // names of applicable named maps
  std::vector<RatMat> named_cmats;
};
const ConjMoves& conj_moves(const RootSystem& rs, int node_1based);

// Classes of the nonzero torsion involutions tau_h, h in {0,1}^n mod 2Pi,
// commuting with sigma, under the conjugation moves above.  Each class is
// the sorted list of its 0/1 coweights.
std::vector<std::vector<RatVec>> classify_inner(const Chevalley& ch,
                                                int node_1based);

// Classes of the involutions B o tau_{(1/2)H} over the given base
// involutions B, where sign = -1 selects the sigma-anticommuting slices
// (H over {0..3}^n) and sign = +1 the commuting ones (H over {0,2}^n),
// modulo torus conjugation, the conjugation moves, and (sign = -1 only)
// the sigma-twist X -> X o tau_{K_node}.  Returns one representative per
// torus class, grouped into conjugacy classes.
std::vector<std::vector<RootAut>> classify_slice(
    const Chevalley& ch, int node_1based, const std::vector<RootAut>& bases,
    int sign);

// Table 1 regeneration: involutive root-lattice maps permuting the
// extended base (Pi minus alpha_node) + {-delta}, with their sigma signs
// and the normal form whose root matrix they equal.
struct EnumeratedForm {
  RatMat rmat;
  int sign = 0;
  std::string form;  // matched normal-form id ("" if none matches)
};
std::vector<EnumeratedForm> enumerate_normal_forms(const RootSystem& rs,
                                                   int node_1based);

// ------------------------------------------------------------ table checks --

struct TableCheck {
  std::vector<std::string> mismatches;  // unresolved disagreements
  std::vector<std::string> flagged;     // documented printed-label typos hit
  std::vector<std::string> notes;       // informational records
  bool ok() const { return mismatches.empty(); }
};

// Regenerates table n (1..8) and diffs it against the golden data; results
// are memoized.  A clean build has empty mismatches for every table and
// flagged entries exactly for the shipped discrepancy list.
const TableCheck& check_table(int n);

// -------------------------------------------------------------- witnesses --

struct WitnessReport {
  int total = 0;
  std::vector<std::string> checked;   // one line per claim
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Replays every claim in data/witnesses/claims.tsv exactly.
WitnessReport verify_witnesses();

}  // namespace lie
