#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcq/families.hpp"
#include "lcq/qasst.hpp"

namespace lcq {

/// Orbit sizes grow exponentially in the number of parts; every count that
/// can overflow a machine word is exact arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// ------------------------------------------------------------ path/cycle ---

/// Bouchet's closed form for |O(P_n)|, n >= 1, evaluated through the integer
/// recurrence satisfied by (1+sqrt3)^m and (1-sqrt3)^m.
BigInt bouchet_path_count(int n);
/// Bouchet's closed form for |O(C_n)|, n >= 3.
BigInt bouchet_cycle_count(int n);

// -------------------------------------------------------------- QASST counts ---

/// Number of ways to replace each quotient by a locally equivalent quotient
/// (complete, or a star centered at any of its nodes) such that every tree
/// edge remains a strong split. Tree DP; rejects prime quotients.
BigInt phi_count(const Qasst& t);

/// Closed form of phi_count on the star-shaped tree of K_{n_1..n_k}.
BigInt kpartite_phi(const std::vector<int>& n_list);
/// |O(K_{n,m})| = nm + n + m + 3 for n, m >= 2.
BigInt bipartite_orbit_size(int n, int m);
/// Size of the orbit of K_{n_1..n_k}: even-size subset products plus the
/// star-pointed terms.
BigInt kpartite_orbit_size(const std::vector<int>& n_list);
/// Size of the orbit of CS_{n_1..n_k}: odd-size subset products plus the
/// star-pointed terms.
BigInt clique_star_orbit_size(const std::vector<int>& n_list);
BigInt orbit_size(OrbitTag tag, const std::vector<int>& n_list);

/// Number of isomorphism classes in the orbit, equal part sizes, k >= 3.
std::int64_t iso_class_count(OrbitTag tag, int k);
/// Isomorphism classes in O(K_{n,m}): 6 when n != m, 4 when n == m.
std::int64_t bipartite_iso_class_count(int n, int m);

// ------------------------------------------------------------ assignments ---

/// Kind of an outer quotient Q_i (i >= 1) of the star-shaped tree, as seen
/// from its split-node toward the central quotient Q_0.
enum class LeafKind { Complete, StarCenter, StarSpoke };

/// Replacement pattern for the star-shaped tree {Q_0, Q_1..Q_k}: Q_0 is
/// complete (center == 0) or a star centered at its split-node toward
/// Q_center; kinds[i - 1] is the kind of Q_i.
struct Assignment {
  std::vector<int> n_list;
  int center = 0;
  std::vector<LeafKind> kinds;
  /// For StarSpoke quotients, the 1-based leaf index (within the block) of
  /// the star center; 0 means the first leaf.
  std::vector<int> spoke_centers;
  bool operator==(const Assignment& other) const = default;
};

/// Every tree edge forms a valid join.
bool assignment_valid(const Assignment& a);
/// Throws InvalidSpecError if the assignment is not valid.
void require_valid(const Assignment& a);
/// Star-shaped tree realizing the assignment, with block i on the
/// consecutive labels block_vertices(n_list, i).
Qasst assignment_qasst(const Assignment& a);
/// |E| of the reconstructed graph, by internal plus crossing terms.
std::int64_t edge_count_from_assignment(const Assignment& a);
/// Maximum vertex degree of the reconstructed graph.
std::int64_t max_degree_from_assignment(const Assignment& a);
/// All valid assignments with spoke centers at the first leaf.
std::vector<Assignment> all_assignments(const std::vector<int>& n_list);

std::string leaf_kind_name(LeafKind kind);

// -------------------------------------------------------- representatives ---

/// One of the three symmetry families of the orbit: case 1 has a complete
/// Q_0; cases 2(j) and 3(j) have Q_0 pointed at Q_j, with Q_j star-center
/// (case 2) or complete (case 3).
struct RepSpec {
  OrbitTag tag = OrbitTag::KPartite;
  int case_id = 1;
  /// Pointer index j for cases 2 and 3 (1-based); 0 for case 1.
  int j = 0;
  /// Second-smallest part index used by the construction, 0 if unused.
  int l = 0;
  Assignment assignment;
  std::int64_t value = 0;
};

/// Parity (0 even, 1 odd) of the number of star-spoke outer quotients in
/// each case of the given orbit; the two orbits use opposite parities.
int ss_parity(OrbitTag tag, int case_id);

/// Canonical member of a case: every outer quotient star-spoke except that
/// Q_j is fixed by the case and, if the parity requires it, one quotient is
/// switched (to star-center in case 1 at index j, to complete at index l
/// otherwise). j and l are 1-based. The value is the member's edge count.
RepSpec build_case(OrbitTag tag, const std::vector<int>& n_list, int case_id, int j, int l);

/// (n_j - 1)(k - 1) + (n_j - 2)(n_j - 1)/2 - (k - 2)(k - 1)/2; its sign
/// decides between the complete-center and pointed-center candidates.
std::int64_t edge_hyperbola(int k, int n_j);

/// Minimum edge representatives; two entries when f(k, n_j) = 0.
std::vector<RepSpec> min_edge_rep(OrbitTag tag, const std::vector<int>& n_list);

/// Max-degree value of the best member of each case, in case order 1, 2, 3.
/// Cases 1 and 3 are exact case minima. The case-2 value is the degree of
/// the member pointed at the smallest part, which can exceed the true case-2
/// minimum by one; the minimum over the three entries is always the exact
/// orbit minimum.
std::vector<std::int64_t> max_degree_case_values(OrbitTag tag, const std::vector<int>& n_list);
/// Representatives of minimum maximum degree; one entry per tied case.
std::vector<RepSpec> min_max_degree_rep(OrbitTag tag, const std::vector<int>& n_list);

/// Fewest edges in O(K_{n,m}): a double star with n + m - 1 edges.
std::int64_t bipartite_min_edges(int n, int m);
/// Smallest maximum degree in O(K_{n,m}): max(n, m).
std::int64_t bipartite_min_max_degree(int n, int m);

}  // namespace lcq
