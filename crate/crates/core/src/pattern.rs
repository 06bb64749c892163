use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest frontier accepted. Class tables enumerate all `3^m` colorings.
pub const MAX_FRONTIER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PatternError {
    NoVertices,
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    SelfLoop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    /// Two half-edges on the same vertex.
    DuplicateHalfEdge { vertex: usize },
    /// Internal incidences plus half-edges must be 2 or 3.
    BadDegree { vertex: usize, degree: usize },
    Disconnected { unreachable: usize },
    FrontierTooLarge { size: usize, max: usize },
    NotAPermutation { symmetry: Vec<usize> },
    MissingIdentity,
    NotClosed { a: Vec<usize>, b: Vec<usize> },
    /// The permutation does not preserve the cyclic frontier order up to
    /// rotation and reflection.
    NotDihedral { symmetry: Vec<usize> },
    /// No adjacency- and half-edge-preserving vertex map induces the permutation.
    NotInduced { symmetry: Vec<usize> },
}

impl fmt::Display for PatternError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PatternError::*;
        match self {
            NoVertices => write!(f, "pattern has no vertices"),
            VertexOutOfRange { vertex, vertex_count } => {
                write!(f, "vertex {vertex} out of range (pattern has {vertex_count} vertices)")
            }
            SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            DuplicateEdge { u, v } => write!(f, "edge {u}-{v} listed more than once"),
            DuplicateHalfEdge { vertex } => {
                write!(f, "vertex {vertex} carries more than one half-edge (at most one allowed)")
            }
            BadDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}, every vertex must have degree 2 or 3")
            }
            Disconnected { unreachable } => {
                write!(f, "internal graph is disconnected (vertex {unreachable} unreachable from 0)")
            }
            FrontierTooLarge { size, max } => write!(f, "frontier of {size} half-edges exceeds the limit of {max}"),
            NotAPermutation { symmetry } => {
                write!(f, "symmetry {symmetry:?} is not a permutation of the frontier indices")
            }
            MissingIdentity => write!(f, "symmetry group does not contain the identity"),
            NotClosed { a, b } => write!(f, "symmetry group not closed: {a:?} composed with {b:?} is missing"),
            NotDihedral { symmetry } => {
                write!(f, "symmetry {symmetry:?} does not preserve the cyclic frontier order")
            }
            NotInduced { symmetry } => {
                write!(f, "symmetry {symmetry:?} is not induced by any degree-preserving map of the pattern")
            }
        }
    }
}

impl core::error::Error for PatternError {}

/// A permutation of frontier indices; `image()[i]` is the image of index `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symmetry(Vec<usize>);

impl Symmetry {
    pub fn identity(len: usize) -> Self {
        Symmetry((0..len).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        Symmetry(images)
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Symmetry) -> Symmetry {
        Symmetry(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Symmetry {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Symmetry(inv)
    }

    fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        for &x in &self.0 {
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// True when the map is a rotation or reflection of the cycle `0..m`.
    pub fn is_dihedral(&self) -> bool {
        let m = self.0.len();
        if m <= 2 {
            return self.is_permutation();
        }
        let k = self.0[0];
        let rotation = (0..m).all(|i| self.0[i] == (i + k) % m);
        let reflection = (0..m).all(|i| self.0[i] == (k + m - i) % m);
        rotation || reflection
    }

    /// True when the map reverses the cyclic orientation.
    pub fn is_reflection(&self) -> bool {
        let m = self.0.len();
        m > 2 && self.is_dihedral() && self.0[1] == (self.0[0] + m - 1) % m
    }
}

/// A plane subcubic pattern: a connected simple graph plus a cyclically
/// ordered list of half-edges, together with a group of frontier symmetries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    frontier: Vec<usize>,
    symmetries: Vec<Symmetry>,
}

impl Pattern {
    /// Builds and validates a pattern.
    ///
    /// `frontier[i]` is the vertex carrying the `i`-th half-edge in cyclic
    /// order around the outer face. `symmetries` must be the whole group,
    /// identity included; it is stored sorted.
    pub fn new(
        name: impl Into<String>,
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        frontier: Vec<usize>,
        mut symmetries: Vec<Symmetry>,
    ) -> Result<Pattern, PatternError> {
        if vertex_count == 0 {
            return Err(PatternError::NoVertices);
        }
        let in_range = |v: usize| {
            if v < vertex_count {
                Ok(())
            } else {
                Err(PatternError::VertexOutOfRange { vertex: v, vertex_count })
            }
        };

        let mut degree = vec![0usize; vertex_count];
        let mut seen_edges: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            in_range(u)?;
            in_range(v)?;
            if u == v {
                return Err(PatternError::SelfLoop { vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if seen_edges.contains(&key) {
                return Err(PatternError::DuplicateEdge { u, v });
            }
            seen_edges.push(key);
            degree[u] += 1;
            degree[v] += 1;
        }

        if frontier.len() > MAX_FRONTIER {
            return Err(PatternError::FrontierTooLarge { size: frontier.len(), max: MAX_FRONTIER });
        }
        let mut has_half = vec![false; vertex_count];
        for &v in &frontier {
            in_range(v)?;
            if has_half[v] {
                return Err(PatternError::DuplicateHalfEdge { vertex: v });
            }
            has_half[v] = true;
            degree[v] += 1;
        }
        if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, d)| !(2..=3).contains(*d)) {
            return Err(PatternError::BadDegree { vertex, degree });
        }

        let pattern = {
            symmetries.sort();
            symmetries.dedup();
            Pattern { name: name.into(), vertex_count, edges, frontier, symmetries }
        };
        if let Some(unreachable) = pattern.first_unreachable() {
            return Err(PatternError::Disconnected { unreachable });
        }
        pattern.check_symmetries()?;
        Ok(pattern)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn internal_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertices carrying the half-edges, in cyclic frontier order.
    pub fn frontier(&self) -> &[usize] {
        &self.frontier
    }

    pub fn frontier_len(&self) -> usize {
        self.frontier.len()
    }

    /// The symmetry group, sorted, identity first.
    pub fn symmetries(&self) -> &[Symmetry] {
        &self.symmetries
    }

    /// Total number of edge ids: internal edges followed by half-edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len() + self.frontier.len()
    }

    /// Endpoints of every edge id. Half-edges have a single endpoint.
    fn edge_endpoints(&self) -> impl Iterator<Item = (usize, Option<usize>)> + '_ {
        self.edges
            .iter()
            .map(|&(u, v)| (u, Some(v)))
            .chain(self.frontier.iter().map(|&v| (v, None)))
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn first_unreachable(&self) -> Option<usize> {
        let adj = self.neighbors();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    fn check_symmetries(&self) -> Result<(), PatternError> {
        let m = self.frontier.len();
        for s in &self.symmetries {
            if s.0.len() != m || !s.is_permutation() {
                return Err(PatternError::NotAPermutation { symmetry: s.0.clone() });
            }
        }
        if !self.symmetries.iter().any(Symmetry::is_identity) {
            return Err(PatternError::MissingIdentity);
        }
        for a in &self.symmetries {
            for b in &self.symmetries {
                if self.symmetries.binary_search(&a.compose(b)).is_err() {
                    return Err(PatternError::NotClosed { a: a.0.clone(), b: b.0.clone() });
                }
            }
            // Implied by closure in a finite set, kept as an explicit axiom check.
            if self.symmetries.binary_search(&a.inverse()).is_err() {
                return Err(PatternError::NotClosed { a: a.0.clone(), b: a.0.clone() });
            }
        }
        for s in &self.symmetries {
            if !s.is_dihedral() {
                return Err(PatternError::NotDihedral { symmetry: s.0.clone() });
            }
            if !self.is_induced(s) {
                return Err(PatternError::NotInduced { symmetry: s.0.clone() });
            }
        }
        Ok(())
    }

    /// Whether some graph automorphism sends the half-edge at frontier index
    /// `i` to the half-edge at index `perm[i]` for every `i`.
    pub fn is_induced(&self, perm: &Symmetry) -> bool {
        if perm.0.len() != self.frontier.len() || !perm.is_permutation() {
            return false;
        }
        let n = self.vertex_count;
        let adj = self.neighbors();
        let mut half_of = vec![None; n];
        for (i, &v) in self.frontier.iter().enumerate() {
            half_of[v] = Some(i);
        }
        let mut map: Vec<Option<usize>> = vec![None; n];
        let mut used = vec![false; n];
        for (i, &v) in self.frontier.iter().enumerate() {
            let target = self.frontier[perm.0[i]];
            map[v] = Some(target);
            used[target] = true;
        }
        let order = bfs_order(&adj);
        extend_automorphism(&adj, &half_of, perm, &order, 0, &mut map, &mut used)
    }

    /// Adjacency of the line graph over edge ids (internal edges in input
    /// order, then half-edges in frontier order).
    pub fn line_graph(&self) -> LineGraph {
        let endpoints: Vec<_> = self.edge_endpoints().collect();
        let mut incident = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in endpoints.iter().enumerate() {
            incident[u].push(id);
            if let Some(v) = v {
                incident[v].push(id);
            }
        }
        let mut adjacency = vec![Vec::new(); endpoints.len()];
        for ids in &incident {
            for &a in ids {
                for &b in ids {
                    if a != b {
                        adjacency[a].push(b);
                    }
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        LineGraph { internal: self.edges.len(), adjacency }
    }
}

fn bfs_order(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut order = Vec::with_capacity(adj.len());
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    order
}

fn extend_automorphism(
    adj: &[Vec<usize>],
    half_of: &[Option<usize>],
    perm: &Symmetry,
    order: &[usize],
    depth: usize,
    map: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
) -> bool {
    let Some(&v) = order.get(depth) else {
        // Bijective by construction; check every edge maps to an edge.
        return adj.iter().enumerate().all(|(u, ns)| {
            let mu = map[u].unwrap();
            ns.iter().all(|&w| adj[mu].contains(&map[w].unwrap()))
        });
    };
    let consistent = |target: usize, map: &[Option<usize>]| {
        if adj[target].len() != adj[v].len() {
            return false;
        }
        let half_ok = match (half_of[v], half_of[target]) {
            (Some(i), Some(j)) => perm.0[i] == j,
            (None, None) => true,
            _ => false,
        };
        half_ok
            && adj[v]
                .iter()
                .all(|&w| map[w].is_none_or(|mw| adj[target].contains(&mw)))
    };
    if let Some(target) = map[v] {
        return consistent(target, map) && extend_automorphism(adj, half_of, perm, order, depth + 1, map, used);
    }
    for target in 0..adj.len() {
        if used[target] || !consistent(target, map) {
            continue;
        }
        map[v] = Some(target);
        used[target] = true;
        if extend_automorphism(adj, half_of, perm, order, depth + 1, map, used) {
            return true;
        }
        map[v] = None;
        used[target] = false;
    }
    false
}

/// Adjacency lists of the line graph `L(H)`, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    internal: usize,
    adjacency: Vec<Vec<usize>>,
}

impl LineGraph {
    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    /// Number of internal edge ids; half-edge ids start here.
    pub fn internal_count(&self) -> usize {
        self.internal
    }

    pub fn frontier_id(&self, frontier_index: usize) -> usize {
        self.internal + frontier_index
    }

    /// Sorted neighbors of an edge id.
    pub fn neighbors(&self, id: usize) -> &[usize] {
        &self.adjacency[id]
    }

    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Number of unordered adjacent pairs.
    pub fn adjacency_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident(m: usize) -> Vec<Symmetry> {
        vec![Symmetry::identity(m)]
    }

    #[test]
    fn two_vertex_path() {
        let p = Pattern::new(
            "P22",
            2,
            vec![(0, 1)],
            vec![0, 1],
            vec![Symmetry::identity(2), Symmetry::from_images(vec![1, 0])],
        )
        .unwrap();
        assert_eq!(p.frontier_len(), 2);
        assert_eq!(p.symmetries().len(), 2);
        let lg = p.line_graph();
        assert_eq!(lg.neighbors(0), &[1, 2]);
        assert!(!lg.are_adjacent(1, 2));
    }

    #[test]
    fn degree_four_rejected() {
        let err = Pattern::new(
            "star",
            5,
            vec![(0, 1), (0, 2), (0, 3), (0, 4)],
            vec![1, 2, 3, 4],
            ident(4),
        )
        .unwrap_err();
        assert_eq!(err, PatternError::BadDegree { vertex: 0, degree: 4 });
    }

    #[test]
    fn degree_one_rejected() {
        let err = Pattern::new("p", 2, vec![(0, 1)], vec![0], ident(1)).unwrap_err();
        assert_eq!(err, PatternError::BadDegree { vertex: 1, degree: 1 });
    }

    #[test]
    fn two_half_edges_on_one_vertex() {
        let err = Pattern::new("p", 2, vec![(0, 1)], vec![0, 0, 1], ident(3)).unwrap_err();
        assert_eq!(err, PatternError::DuplicateHalfEdge { vertex: 0 });
    }

    #[test]
    fn simple_graph_checks() {
        assert_eq!(
            Pattern::new("p", 2, vec![(0, 1), (1, 0)], vec![0, 1], ident(2)).unwrap_err(),
            PatternError::DuplicateEdge { u: 1, v: 0 }
        );
        assert_eq!(
            Pattern::new("p", 2, vec![(0, 0)], vec![0, 1], ident(2)).unwrap_err(),
            PatternError::SelfLoop { vertex: 0 }
        );
        assert_eq!(
            Pattern::new("p", 2, vec![(0, 2)], vec![0, 1], ident(2)).unwrap_err(),
            PatternError::VertexOutOfRange { vertex: 2, vertex_count: 2 }
        );
    }

    #[test]
    fn disconnected_rejected() {
        let err = Pattern::new("p", 4, vec![(0, 1), (2, 3)], vec![0, 1, 2, 3], ident(4)).unwrap_err();
        assert_eq!(err, PatternError::Disconnected { unreachable: 2 });
    }

    #[test]
    fn group_axioms() {
        let swap = Symmetry::from_images(vec![1, 0]);
        let err = Pattern::new("p", 2, vec![(0, 1)], vec![0, 1], vec![swap]).unwrap_err();
        assert_eq!(err, PatternError::MissingIdentity);

        // 4-cycle with half-edges: rotation by one without its powers.
        let rot = Symmetry::from_images(vec![1, 2, 3, 0]);
        let err = Pattern::new(
            "c4",
            4,
            vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            vec![0, 1, 2, 3],
            vec![Symmetry::identity(4), rot],
        )
        .unwrap_err();
        assert!(matches!(err, PatternError::NotClosed { .. }));
    }

    #[test]
    fn full_dihedral_group_of_square() {
        let mut group = Vec::new();
        for k in 0..4 {
            group.push(Symmetry::from_images((0..4).map(|i| (i + k) % 4).collect()));
            group.push(Symmetry::from_images((0..4).map(|i| (k + 4 - i) % 4).collect()));
        }
        let p = Pattern::new("c4", 4, vec![(0, 1), (1, 2), (2, 3), (3, 0)], vec![0, 1, 2, 3], group).unwrap();
        assert_eq!(p.symmetries().len(), 8);
        assert_eq!(p.symmetries().iter().filter(|s| s.is_reflection()).count(), 4);
    }

    #[test]
    fn non_induced_symmetry_rejected() {
        // Path 2-3-2: swapping an end half-edge with the middle one is not a graph map.
        let bad = Symmetry::from_images(vec![1, 0, 2]);
        assert!(bad.is_dihedral());
        let err = Pattern::new("p232", 3, vec![(0, 1), (1, 2)], vec![0, 1, 2], vec![Symmetry::identity(3), bad]).unwrap_err();
        assert!(matches!(err, PatternError::NotInduced { .. }));
    }

    #[test]
    fn non_dihedral_rejected() {
        // Tree automorphism swapping the two ends, which scrambles the frontier order.
        // u'=3 - u=0 - v=1 - w=2 - w'=5, v'=4 on v; frontier [u', u, v', w', w].
        let edges = vec![(0, 1), (1, 2), (0, 3), (1, 4), (2, 5)];
        let frontier = vec![3, 0, 4, 5, 2];
        let swap = Symmetry::from_images(vec![3, 4, 2, 0, 1]);
        let p = Pattern::new("t", 6, edges.clone(), frontier.clone(), ident(5)).unwrap();
        assert!(p.is_induced(&swap));
        let err = Pattern::new("t", 6, edges, frontier, vec![Symmetry::identity(5), swap]).unwrap_err();
        assert!(matches!(err, PatternError::NotDihedral { .. }));
    }

    #[test]
    fn dihedral_classification() {
        assert!(Symmetry::from_images(vec![4, 3, 2, 1, 0]).is_reflection());
        assert!(Symmetry::from_images(vec![1, 2, 3, 4, 0]).is_dihedral());
        assert!(!Symmetry::from_images(vec![1, 2, 3, 4, 0]).is_reflection());
        assert!(!Symmetry::from_images(vec![0, 2, 1, 3, 4]).is_dihedral());
    }
}
