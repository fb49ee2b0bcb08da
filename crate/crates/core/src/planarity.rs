//! Exact planarity by face embedding (Demoucron–Malgrange–Pertuiset).
//!
//! The graph is split into biconnected blocks; each block starts from a
//! cycle and repeatedly embeds one path of a bridge into an admissible
//! face. A bridge with no admissible face certifies non-planarity; the
//! classical correctness argument covers every other choice.

use crate::graph::{bits, Graph};

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    blocks(g).iter().all(|b| block_planar(b))
}

/// Edge sets of the biconnected blocks (Tarjan lowpoint DFS).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: usize, parent: usize) {
            self.time += 1;
            self.disc[v] = self.time;
            self.low[v] = self.time;
            let mut skipped_parent = false;
            for w in bits(self.g.neighbors(v)) {
                if w == parent && !skipped_parent {
                    skipped_parent = true;
                    continue;
                }
                if self.disc[w] == 0 {
                    self.stack.push((v, w));
                    self.run(w, v);
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.disc[v] {
                        let mut block = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            block.push(e);
                            if e == (v, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if self.disc[w] < self.disc[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.disc[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        disc: vec![0; g.n()],
        low: vec![0; g.n()],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in g.vertices() {
        if dfs.disc[v] == 0 {
            dfs.run(v, usize::MAX);
        }
    }
    dfs.out
}

enum Bridge {
    Chord(usize, usize),
    Component { verts: u64, attachments: u64 },
}

impl Bridge {
    fn attachments(&self) -> u64 {
        match *self {
            Bridge::Chord(u, v) => (1 << u) | (1 << v),
            Bridge::Component { attachments, .. } => attachments,
        }
    }
}

fn block_planar(edges: &[(usize, usize)]) -> bool {
    let m = edges.len();
    if m <= 3 {
        return true;
    }
    let mut verts = 0u64;
    let mut adj = [0u64; 64];
    for &(u, v) in edges {
        verts |= (1 << u) | (1 << v);
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let nb = verts.count_ones() as usize;
    if nb >= 3 && m > 3 * nb - 6 {
        return false;
    }

    // Seed with any cycle; a block with >= 4 edges is 2-connected so one exists.
    let cycle = find_cycle(&adj, verts.trailing_zeros() as usize);
    let mut h_adj = [0u64; 64];
    let mut h_verts = 0u64;
    let mut h_edges = 0usize;
    let embed = |h_adj: &mut [u64; 64],
                     h_verts: &mut u64,
                     h_edges: &mut usize,
                     path: &[usize]| {
        for w in path.windows(2) {
            h_adj[w[0]] |= 1 << w[1];
            h_adj[w[1]] |= 1 << w[0];
            *h_edges += 1;
        }
        for &v in path {
            *h_verts |= 1 << v;
        }
    };
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    embed(&mut h_adj, &mut h_verts, &mut h_edges, &closed);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    while h_edges < m {
        // Bridges relative to the embedded subgraph.
        let mut bridges: Vec<Bridge> = Vec::new();
        for &(u, v) in edges {
            if h_verts >> u & 1 == 1 && h_verts >> v & 1 == 1 && h_adj[u] >> v & 1 == 0 {
                bridges.push(Bridge::Chord(u, v));
            }
        }
        let mut remaining = verts & !h_verts;
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= adj[v];
                }
                frontier = next & remaining & !comp;
                comp |= frontier;
            }
            let mut attachments = 0u64;
            for v in bits(comp) {
                attachments |= adj[v] & h_verts;
            }
            bridges.push(Bridge::Component {
                verts: comp,
                attachments,
            });
            remaining &= !comp;
        }
        debug_assert!(!bridges.is_empty());

        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |acc, &v| acc | (1 << v)))
            .collect();
        let mut choice: Option<(usize, usize)> = None; // (bridge, face)
        for (bi, bridge) in bridges.iter().enumerate() {
            let att = bridge.attachments();
            let admissible: Vec<usize> = face_masks
                .iter()
                .enumerate()
                .filter(|(_, fm)| att & !*fm == 0)
                .map(|(fi, _)| fi)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((bi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((bi, admissible[0]));
                    }
                }
            }
        }
        let (bi, fi) = choice.expect("nonempty bridge list");

        let path: Vec<usize> = match bridges[bi] {
            Bridge::Chord(u, v) => vec![u, v],
            Bridge::Component { verts: comp, attachments } => {
                let mut att = bits(attachments);
                let a = att.next().expect("2-connected block: >= 2 attachments");
                let b = att.next().expect("2-connected block: >= 2 attachments");
                bridge_path(&adj, comp, a, b)
            }
        };

        let face = faces.swap_remove(fi);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        embed(&mut h_adj, &mut h_verts, &mut h_edges, &path);
        debug_assert_eq!(
            faces.len(),
            h_edges + 2 - (h_verts.count_ones() as usize),
            "Euler face count drifted"
        );
    }
    true
}

/// First cycle reachable from `start` (DFS back edge).
fn find_cycle(adj: &[u64; 64], start: usize) -> Vec<usize> {
    fn go(
        adj: &[u64; 64],
        v: usize,
        parent: usize,
        visited: &mut u64,
        path: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        for w in bits(adj[v]) {
            if w == parent {
                continue;
            }
            if let Some(pos) = path.iter().position(|&x| x == w) {
                return Some(path[pos..].to_vec());
            }
            if *visited >> w & 1 == 1 {
                continue;
            }
            *visited |= 1 << w;
            path.push(w);
            if let Some(c) = go(adj, w, v, visited, path) {
                return Some(c);
            }
            path.pop();
        }
        None
    }
    let mut visited = 1u64 << start;
    let mut path = vec![start];
    go(adj, start, usize::MAX, &mut visited, &mut path).expect("block with >= 4 edges has a cycle")
}

/// Shortest path a -> b whose interior stays inside the bridge component.
fn bridge_path(adj: &[u64; 64], comp: u64, a: usize, b: usize) -> Vec<usize> {
    let mut prev = [usize::MAX; 64];
    let mut frontier = adj[a] & comp;
    let mut seen = frontier;
    for v in bits(frontier) {
        prev[v] = a;
    }
    loop {
        if adj[b] & frontier != 0 {
            prev[b] = (adj[b] & frontier).trailing_zeros() as usize;
            break;
        }
        let mut next = 0u64;
        for v in bits(frontier) {
            for w in bits(adj[v] & comp & !seen) {
                prev[w] = v;
                next |= 1 << w;
            }
        }
        seen |= next;
        frontier = next;
        debug_assert!(frontier != 0, "attachment unreachable through bridge");
    }
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    path
}

/// Splits face `face` along `path` (which runs between two face vertices).
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().expect("path has >= 2 vertices");
    let i = face.iter().position(|&v| v == a).expect("a on face");
    let j = face.iter().position(|&v| v == b).expect("b on face");
    let len = face.len();
    let arc = |from: usize, to: usize| {
        let mut arc = Vec::new();
        let mut p = from;
        loop {
            arc.push(face[p]);
            if p == to {
                break;
            }
            p = (p + 1) % len;
        }
        arc
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = arc(i, j); // a .. b
    f1.extend(interior.iter().rev());
    let mut f2 = arc(j, i); // b .. a
    f2.extend(interior.iter());
    (f1, f2)
}
