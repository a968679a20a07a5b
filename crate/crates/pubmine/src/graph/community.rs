//! Community detection over co-occurrence graphs.
//!
//! The algorithm is greedy modularity optimization (Louvain-style local
//! moves plus graph aggregation), made fully deterministic:
//!
//! * nodes are visited in ascending label order, never shuffled;
//! * move gains are compared in exact integer arithmetic (the usual
//!   floating-point gain, scaled by `2m²`, is an integer for integer edge
//!   weights), so no tie ever depends on rounding;
//! * a node moves only on a strict gain improvement, preferring the lowest
//!   community id among equally good targets.
//!
//! Graphs with at most [`EXHAUSTIVE_NODE_LIMIT`] nodes skip the greedy phase
//! entirely: every set partition is scored and the best one taken, so small
//! results are exactly optimal rather than merely locally optimal. (Greedy
//! local moves can stall below the optimum on small dense graphs, where one
//! bad early merge cannot be undone.)
//!
//! After either phase, any community that is internally disconnected is
//! split into its connected components. That never lowers modularity and
//! restores the invariant that a community is a connected unit. Final ids
//! are assigned by ascending smallest member label.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::CooccurrenceGraph;

/// A connected group of nodes produced by [`detect_communities`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Community {
    pub id: usize,
    pub members: BTreeSet<String>,
}

/// Working graph for one aggregation level. Adjacency is symmetric and
/// loop-free; aggregated intra-community weight lives in `loops`.
struct LevelGraph {
    adjacency: Vec<BTreeMap<usize, u64>>,
    loops: Vec<u64>,
}

impl LevelGraph {
    fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Weighted degree: incident edge weight plus twice the loop weight.
    fn degrees(&self) -> Vec<u64> {
        self.adjacency
            .iter()
            .zip(&self.loops)
            .map(|(nbrs, loop_w)| nbrs.values().sum::<u64>() + 2 * loop_w)
            .collect()
    }
}

/// One pass of local moves. Returns the community index per node; ids are
/// drawn from node indices and need renumbering afterwards.
fn one_level(graph: &LevelGraph) -> Vec<usize> {
    let n = graph.node_count();
    let degrees = graph.degrees();
    let two_m: u64 = degrees.iter().sum();
    let mut comm: Vec<usize> = (0..n).collect();
    if two_m == 0 {
        return comm;
    }
    let two_m = two_m as i128;
    let mut sum_tot: Vec<u64> = degrees.clone();

    loop {
        let mut moved = false;
        for i in 0..n {
            let old = comm[i];
            // Edge weight from i into each adjacent community. Staying put is
            // always a candidate, even when i has no neighbor at home.
            let mut k_in: BTreeMap<usize, u64> = BTreeMap::new();
            k_in.insert(old, 0);
            for (&j, &w) in &graph.adjacency[i] {
                *k_in.entry(comm[j]).or_insert(0) += w;
            }

            // Gains are compared with i lifted out of its community.
            sum_tot[old] -= degrees[i];
            let k_i = degrees[i] as i128;
            let gain = |c: usize, k_in_c: u64| two_m * k_in_c as i128 - k_i * sum_tot[c] as i128;

            let mut best = old;
            let mut best_gain = gain(old, k_in[&old]);
            for (&c, &k) in &k_in {
                if c == old {
                    continue;
                }
                // Strict improvement with ascending iteration: ties resolve
                // to the lowest community id, and never beat staying.
                let g = gain(c, k);
                if g > best_gain {
                    best_gain = g;
                    best = c;
                }
            }

            sum_tot[best] += degrees[i];
            comm[i] = best;
            if best != old {
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    comm
}

/// Largest node count solved by exhaustive search instead of greedy moves;
/// Bell(10) = 115,975 partitions, still well under a millisecond of scoring.
const EXHAUSTIVE_NODE_LIMIT: usize = 10;

/// Scores every set partition of the nodes and returns the best one.
///
/// Partitions are enumerated as restricted-growth strings and compared by
/// `4m²·Q = Σ_c (4m·E_c − Σtot_c²)`, an exact integer for integer weights;
/// the first partition attaining the maximum wins, so the result never
/// depends on floating point.
fn exhaustive_assignment(adjacency: &[BTreeMap<usize, u64>]) -> Vec<usize> {
    let n = adjacency.len();
    if n == 0 {
        return Vec::new();
    }
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    let mut degrees = vec![0u64; n];
    for (i, nbrs) in adjacency.iter().enumerate() {
        for (&j, &w) in nbrs {
            degrees[i] += w;
            if i < j {
                edges.push((i, j, w));
            }
        }
    }
    let m: u64 = edges.iter().map(|&(_, _, w)| w).sum();
    if m == 0 {
        return (0..n).collect();
    }

    let mut best_score = i128::MIN;
    let mut best: Vec<usize> = (0..n).collect();
    let mut rgs = vec![0usize; n];
    loop {
        let community_count = rgs.iter().max().unwrap() + 1;
        let mut intra = vec![0u64; community_count];
        let mut tot = vec![0u64; community_count];
        for &(i, j, w) in &edges {
            if rgs[i] == rgs[j] {
                intra[rgs[i]] += w;
            }
        }
        for (node, &c) in rgs.iter().enumerate() {
            tot[c] += degrees[node];
        }
        let score: i128 = (0..community_count)
            .map(|c| 4 * m as i128 * intra[c] as i128 - (tot[c] as i128).pow(2))
            .sum();
        if score > best_score {
            best_score = score;
            best = rgs.clone();
        }

        // Advance to the next restricted-growth string: the rightmost digit
        // that may still grow does, and everything after it resets.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return best;
            }
            let max_prev = *rgs[..i].iter().max().unwrap();
            if rgs[i] <= max_prev {
                rgs[i] += 1;
                for v in &mut rgs[i + 1..] {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Renumbers community ids to `0..k` in ascending old-id order.
fn renumber(comm: &[usize]) -> (Vec<usize>, usize) {
    let distinct: BTreeSet<usize> = comm.iter().copied().collect();
    let map: BTreeMap<usize, usize> = distinct
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    (comm.iter().map(|c| map[c]).collect(), distinct.len())
}

/// Collapses each community into a single node, folding intra-community
/// weight into loops.
fn aggregate(graph: &LevelGraph, comm: &[usize], community_count: usize) -> LevelGraph {
    let mut adjacency = vec![BTreeMap::new(); community_count];
    let mut loops = vec![0u64; community_count];
    for i in 0..graph.node_count() {
        let ci = comm[i];
        loops[ci] += graph.loops[i];
        for (&j, &w) in &graph.adjacency[i] {
            if j <= i {
                continue; // each undirected edge once
            }
            let cj = comm[j];
            if ci == cj {
                loops[ci] += w;
            } else {
                *adjacency[ci].entry(cj).or_insert(0) += w;
                *adjacency[cj].entry(ci).or_insert(0) += w;
            }
        }
    }
    LevelGraph { adjacency, loops }
}

/// Partitions the graph into communities by modularity optimization —
/// exhaustive for small graphs, greedy multi-level for the rest.
///
/// The result is a partition of all nodes: every node appears in exactly one
/// community, every community is non-empty and connected, and isolated nodes
/// come back as singletons. Identical inputs give identical output, bit for
/// bit — there is no randomness anywhere.
pub fn detect_communities(graph: &CooccurrenceGraph) -> Vec<Community> {
    let labels: Vec<String> = graph.nodes().map(str::to_string).collect();
    let label_index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let n = labels.len();

    let mut adjacency = vec![BTreeMap::new(); n];
    for (a, b, w) in graph.edges() {
        let (ia, ib) = (label_index[a], label_index[b]);
        adjacency[ia].insert(ib, w);
        adjacency[ib].insert(ia, w);
    }

    let mut assignment: Vec<usize>;
    if n <= EXHAUSTIVE_NODE_LIMIT {
        assignment = exhaustive_assignment(&adjacency);
    } else {
        // Multi-level greedy phase.
        let mut level = LevelGraph {
            adjacency: adjacency.clone(),
            loops: vec![0; n],
        };
        assignment = (0..n).collect();
        loop {
            let node_count = level.node_count();
            let (comm, community_count) = renumber(&one_level(&level));
            for a in assignment.iter_mut() {
                *a = comm[*a];
            }
            if community_count == node_count {
                break; // no node moved at this level
            }
            level = aggregate(&level, &comm, community_count);
        }
    }

    // Split any internally disconnected community into its components; this
    // cannot decrease modularity and keeps communities meaningful as units.
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (node, &c) in assignment.iter().enumerate() {
        groups.entry(c).or_default().push(node);
    }
    let mut member_sets: Vec<BTreeSet<usize>> = Vec::new();
    for nodes in groups.values() {
        member_sets.extend(connected_components(nodes, &adjacency));
    }

    // Final ids follow the smallest member label of each community.
    member_sets.sort_by(|a, b| {
        let first = |s: &BTreeSet<usize>| labels[*s.iter().next().expect("non-empty")].clone();
        first(a).cmp(&first(b))
    });
    member_sets
        .into_iter()
        .enumerate()
        .map(|(id, nodes)| Community {
            id,
            members: nodes.into_iter().map(|i| labels[i].clone()).collect(),
        })
        .collect()
}

/// Connected components of the subgraph induced by `nodes`.
fn connected_components(
    nodes: &[usize],
    adjacency: &[BTreeMap<usize, u64>],
) -> Vec<BTreeSet<usize>> {
    let in_group: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut unvisited = in_group.clone();
    let mut components = Vec::new();
    while let Some(&start) = unvisited.iter().next() {
        let mut component = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        unvisited.remove(&start);
        component.insert(start);
        while let Some(node) = queue.pop_front() {
            for &nbr in adjacency[node].keys() {
                if in_group.contains(&nbr) && unvisited.remove(&nbr) {
                    component.insert(nbr);
                    queue.push_back(nbr);
                }
            }
        }
        components.push(component);
    }
    components
}

/// Modularity of a partition over `graph`.
///
/// `Q = Σ_c [ E_c/m − (Σtot_c / 2m)² ]` with `E_c` the intra-community edge
/// weight, `Σtot_c` the total degree of the community, and `m` the total
/// edge weight. Zero for an edgeless graph. Panics unless `communities` is a
/// partition of exactly the graph's nodes.
pub fn modularity(graph: &CooccurrenceGraph, communities: &[Community]) -> f64 {
    let mut node_comm: BTreeMap<&str, usize> = BTreeMap::new();
    for community in communities {
        for member in &community.members {
            let previous = node_comm.insert(member.as_str(), community.id);
            assert!(previous.is_none(), "node {member:?} in two communities");
        }
    }
    for node in graph.nodes() {
        assert!(node_comm.contains_key(node), "node {node:?} not covered");
    }
    assert_eq!(node_comm.len(), graph.node_count(), "extra nodes in partition");

    let m: u64 = graph.edges().map(|(_, _, w)| w).sum();
    if m == 0 {
        return 0.0;
    }

    let mut intra: BTreeMap<usize, u64> = BTreeMap::new();
    let mut degree: BTreeMap<&str, u64> = BTreeMap::new();
    for (a, b, w) in graph.edges() {
        *degree.entry(a).or_insert(0) += w;
        *degree.entry(b).or_insert(0) += w;
        if node_comm[a] == node_comm[b] {
            *intra.entry(node_comm[a]).or_insert(0) += w;
        }
    }
    let mut sum_tot: BTreeMap<usize, u64> = BTreeMap::new();
    for (node, deg) in degree {
        *sum_tot.entry(node_comm[node]).or_insert(0) += deg;
    }

    let m = m as f64;
    communities
        .iter()
        .map(|c| {
            let e_c = intra.get(&c.id).copied().unwrap_or(0) as f64;
            let tot = sum_tot.get(&c.id).copied().unwrap_or(0) as f64;
            e_c / m - (tot / (2.0 * m)).powi(2)
        })
        .sum()
}
