#pragma once

#include <array>
#include <map>
#include <vector>

#include "qsrg/graph.hpp"
#include "qsrg/switching.hpp"

namespace qsrg {

// All maximum cliques (branch-and-bound Bron-Kerbosch with pivoting), each
// as an ascending vertex list, the list sorted lexicographically. In the
// graphs built here these are exactly the cliques of size 2^(g+1)-1 that
// the censuses count; locally-maximal smaller sets are pruned. jobs > 1
// distributes the top-level branches across threads; the output is
// identical for any job count.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int jobs = 1);

int max_clique_size(const Graph& g);

enum class CliqueClass { A, B, unclassified };

struct CliqueReport {
    std::vector<int> vertices;
    int size = 0;
    CliqueClass clique_class = CliqueClass::unclassified;
    Subspace witness_sigma, witness_pi;
    std::array<int, 3> composition{};  // type I / II / III members
};

// Classifies a maximal clique of the switched graph: Class A when it is a
// generator through alpha, otherwise Class B with the generator pair
// (sigma through alpha, pi meeting it in a (g-1)-space) as witnesses.
// A clique that fits neither signals a bug and throws.
CliqueReport classify_clique(const Quadric& q, const TypedPartition& part, const Graph& gs,
                             const std::vector<int>& clique);

struct CensusReport {
    bool switched = true;
    long total = 0;
    long n_a = 0, n_b = 0;
    std::array<long, 3> through_type{};  // cliques through a vertex, per type
    bool through_type_constant = false;
    int max_size = 0;
    std::vector<int> per_vertex;

    long expected_total = 0;
    long expected_n_a = 0, expected_n_b = 0;
    std::array<long, 3> expected_through_type{};
    int expected_size = 0;
    bool match = false;
};

// Full census of a switched graph (switched = true) or of the point-graph
// itself, compared against the closed-form counts.
CensusReport clique_census(const Quadric& q, const TypedPartition& part, const Graph& g,
                           bool switched = true, int jobs = 1);

struct PartitionSearch {
    enum class Status { found, none, undecided } status = Status::undecided;
    std::vector<std::vector<int>> witness;
    long nodes = 0;
};

// Exact-cover search for a partition of the vertices into maximal cliques.
// When all maximal cliques share one size, v not divisible by it settles the
// question immediately. The search runs within a node budget and reports
// undecided when it is exhausted.
PartitionSearch clique_partition_exists(const Graph& g, long node_budget = 20'000'000);

}  // namespace qsrg
