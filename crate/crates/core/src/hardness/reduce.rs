use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::ThreePartitionInstance;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gadget {
    TopBeam,
    RightWall,
    BottomBeam,
    LeftWall,
    Floor { column: usize, floor: usize },
}

impl fmt::Display for Gadget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gadget::TopBeam => write!(f, "top"),
            Gadget::RightWall => write!(f, "right"),
            Gadget::BottomBeam => write!(f, "bottom"),
            Gadget::LeftWall => write!(f, "left"),
            Gadget::Floor { column, floor } => write!(f, "floor{column}.{floor}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    /// Attaching vertex `index` of a path gadget (first gadget to claim it).
    Attaching {
        gadget: Gadget,
        index: usize,
    },
    Alpha,
    Beta,
    Gamma,
    Delta,
    /// Middle attaching vertices of the left and right walls.
    A,
    B,
    /// Non-attaching blob vertex: slot 0 is the third degree-12 vertex,
    /// slots 1..=12 the degree-3 side.
    BlobInner {
        blob: usize,
        slot: usize,
    },
    BlobEdge {
        blob: usize,
    },
    VerticalPair {
        column: usize,
        cell: usize,
        pair: usize,
        strand: usize,
    },
    Transversal {
        path: usize,
        position: usize,
    },
    Apex,
    ApexEdge,
    Brace,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Attaching { gadget, index } => write!(f, "attach:{gadget}:{index}"),
            Role::Alpha => write!(f, "alpha"),
            Role::Beta => write!(f, "beta"),
            Role::Gamma => write!(f, "gamma"),
            Role::Delta => write!(f, "delta"),
            Role::A => write!(f, "a"),
            Role::B => write!(f, "b"),
            Role::BlobInner { blob, slot } => write!(f, "blob:{blob}:{slot}"),
            Role::BlobEdge { blob } => write!(f, "blob:{blob}"),
            Role::VerticalPair {
                column,
                cell,
                pair,
                strand,
            } => {
                write!(f, "pair:{column}:{cell}:{pair}:{strand}")
            }
            Role::Transversal { path, position } => write!(f, "transversal:{path}:{position}"),
            Role::Apex => write!(f, "w"),
            Role::ApexEdge => write!(f, "apex"),
            Role::Brace => write!(f, "brace"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedVertex {
    pub id: String,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedEdge {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub role: Role,
}

/// One K_{3,12}: `u` and `v` are the attaching ends, `c` the third
/// degree-12 vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blob {
    pub gadget: Gadget,
    pub u: usize,
    pub v: usize,
    pub c: usize,
    pub leaves: Vec<usize>,
}

/// Closed-form gadget counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionSizes {
    pub half_bound: u64,
    pub beam_blobs: u64,
    pub wall_blobs: u64,
    pub columns: u64,
    pub cells_per_column: u64,
    pub floors_per_column: u64,
    pub noncentral_pairs: u64,
    pub floor_blobs: u64,
    pub total_blobs: u64,
    pub vertical_pairs: u64,
    pub transversal_paths: u64,
    pub transversal_path_edges: u64,
    pub apex_degree: u64,
    pub vertices: u64,
    pub edges: u64,
}

#[derive(Clone, Debug)]
pub struct ReducedGraph {
    pub vertices: Vec<ReducedVertex>,
    pub edges: Vec<ReducedEdge>,
    pub blobs: Vec<Blob>,
    /// Attaching vertices of each path gadget, in left-to-right order.
    pub gadgets: BTreeMap<Gadget, Vec<usize>>,
    pub transversal_paths: Vec<Vec<usize>>,
    pub apex: usize,
    pub a: usize,
    pub b: usize,
    pub manifest: ReductionSizes,
}

pub fn expected_sizes(inst: &ThreePartitionInstance) -> ReductionSizes {
    let m = inst.m as u64;
    let h = inst.i.div_ceil(2);
    let p = h + 1;
    let beam = 3 * m * (h + 2) + 1;
    let columns = 3 * m;
    let floors_per_column = 2 * m - 2;
    let vertical_pairs = m * inst.i + columns * (2 * m - 2) * p;
    // each floor has (above + 1) + (below + 1) + 2 attaching vertices; inner
    // cells border two floors, the outermost cells one
    let floor_blobs = if m == 1 {
        0
    } else {
        2 * vertical_pairs - columns * 2 * p + 3 * columns * floors_per_column
    };
    let total_blobs = 2 * beam + 4 + floor_blobs;
    let transversal_path_edges = (3 * m - 3) * p + inst.i;
    let apex_degree = 2 * (beam + 1);
    let ring_attaching = 2 * beam + 4;
    let floor_attaching = floor_blobs + columns * floors_per_column;
    let vertices =
        13 * total_blobs + ring_attaching + floor_attaching + 1 + m * (transversal_path_edges - 1);
    let edges =
        36 * total_blobs + 2 * vertical_pairs + m * transversal_path_edges + apex_degree + 2;
    ReductionSizes {
        half_bound: h,
        beam_blobs: beam,
        wall_blobs: 2,
        columns,
        cells_per_column: 2 * m - 1,
        floors_per_column,
        noncentral_pairs: p,
        floor_blobs,
        total_blobs,
        vertical_pairs,
        transversal_paths: m,
        transversal_path_edges,
        apex_degree,
        vertices,
        edges,
    }
}

struct Builder {
    vertices: Vec<ReducedVertex>,
    edges: Vec<ReducedEdge>,
    blobs: Vec<Blob>,
}

impl Builder {
    fn vertex(&mut self, id: String, role: Role) -> usize {
        self.vertices.push(ReducedVertex { id, role });
        self.vertices.len() - 1
    }

    fn edge(&mut self, s: usize, t: usize, role: Role) {
        let id = format!("e{}", self.edges.len());
        self.edges.push(ReducedEdge {
            id,
            source: s,
            target: t,
            role,
        });
    }

    /// Path gadget on the given attaching vertices (k + 1 of them, k blobs).
    fn path_gadget(&mut self, gadget: Gadget, attaching: &[usize]) {
        for w in attaching.windows(2) {
            let blob = self.blobs.len();
            let c = self.vertex(format!("B{blob}.c"), Role::BlobInner { blob, slot: 0 });
            let leaves: Vec<usize> = (1..=12)
                .map(|slot| self.vertex(format!("B{blob}.{slot}"), Role::BlobInner { blob, slot }))
                .collect();
            for &x in &[w[0], w[1], c] {
                for &y in &leaves {
                    self.edge(x, y, Role::BlobEdge { blob });
                }
            }
            self.blobs.push(Blob {
                gadget,
                u: w[0],
                v: w[1],
                c,
                leaves,
            });
        }
    }

    fn attaching(&mut self, gadget: Gadget, count: usize) -> Vec<usize> {
        (0..count)
            .map(|index| {
                self.vertex(
                    format!("{gadget}.{index}"),
                    Role::Attaching { gadget, index },
                )
            })
            .collect()
    }

    /// Zigzag vertical pairs: pair j joins (top[j], bottom[j+1]) and (top[j+1], bottom[j]).
    fn cell(&mut self, column: usize, cell: usize, pairs: usize, top: &[usize], bottom: &[usize]) {
        for pair in 0..pairs {
            self.edge(
                top[pair],
                bottom[pair + 1],
                Role::VerticalPair {
                    column,
                    cell,
                    pair,
                    strand: 0,
                },
            );
            self.edge(
                top[pair + 1],
                bottom[pair],
                Role::VerticalPair {
                    column,
                    cell,
                    pair,
                    strand: 1,
                },
            );
        }
    }
}

pub fn reduce(inst: &ThreePartitionInstance) -> Result<ReducedGraph> {
    inst.validated()?;
    let sizes = expected_sizes(inst);
    let m = inst.m;
    let h = sizes.half_bound as usize;
    let p = h + 1;
    let beam = sizes.beam_blobs as usize;
    let mut b = Builder {
        vertices: Vec::new(),
        edges: Vec::new(),
        blobs: Vec::new(),
    };

    let top = b.attaching(Gadget::TopBeam, beam + 1);
    let bottom = b.attaching(Gadget::BottomBeam, beam + 1);
    let (alpha, beta, gamma, delta) = (top[0], top[beam], bottom[0], bottom[beam]);
    let a = b.vertex("a".into(), Role::A);
    let bv = b.vertex("b".into(), Role::B);
    for (v, role) in [
        (alpha, Role::Alpha),
        (beta, Role::Beta),
        (gamma, Role::Gamma),
        (delta, Role::Delta),
    ] {
        b.vertices[v].role = role;
    }
    let left = vec![alpha, a, gamma];
    let right = vec![beta, bv, delta];
    let mut gadgets = BTreeMap::new();
    for (g, att) in [
        (Gadget::TopBeam, &top),
        (Gadget::RightWall, &right),
        (Gadget::BottomBeam, &bottom),
        (Gadget::LeftWall, &left),
    ] {
        b.path_gadget(g, att);
        gadgets.insert(g, att.clone());
    }
    b.edge(alpha, beta, Role::Brace);
    b.edge(gamma, delta, Role::Brace);

    let cells = 2 * m - 1;
    for column in 0..3 * m {
        let pairs: Vec<usize> = (0..cells)
            .map(|cell| {
                if cell == m - 1 {
                    inst.a[column] as usize
                } else {
                    p
                }
            })
            .collect();
        let block = 1 + column * (h + 2);
        let mut upper: Vec<usize> = top[block..block + h + 2].to_vec();
        for cell in 0..cells {
            let (lower, next_upper) = if cell + 1 == cells {
                (bottom[block..block + h + 2].to_vec(), Vec::new())
            } else {
                // floor between this cell and the next: [end, above.., below.., end]
                let g = Gadget::Floor {
                    column,
                    floor: cell,
                };
                let count = (pairs[cell] + 1) + (pairs[cell + 1] + 1) + 2;
                let att = b.attaching(g, count);
                b.path_gadget(g, &att);
                let split = 1 + pairs[cell] + 1;
                let parts = (att[1..split].to_vec(), att[split..count - 1].to_vec());
                gadgets.insert(g, att);
                parts
            };
            b.cell(column, cell, pairs[cell], &upper, &lower);
            upper = next_upper;
        }
    }

    let len = sizes.transversal_path_edges as usize;
    let mut paths = Vec::new();
    for path in 0..m {
        let mut seq = vec![a];
        for position in 1..len {
            seq.push(b.vertex(
                format!("t{path}.{position}"),
                Role::Transversal { path, position },
            ));
        }
        seq.push(bv);
        for (position, w) in seq.windows(2).enumerate() {
            b.edge(w[0], w[1], Role::Transversal { path, position });
        }
        paths.push(seq);
    }

    let apex = b.vertex("w".into(), Role::Apex);
    for &v in top.iter().chain(&bottom) {
        b.edge(apex, v, Role::ApexEdge);
    }

    Ok(ReducedGraph {
        vertices: b.vertices,
        edges: b.edges,
        blobs: b.blobs,
        gadgets,
        transversal_paths: paths,
        apex,
        a,
        b: bv,
        manifest: sizes,
    })
}

impl ReducedGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.source] += 1;
            deg[e.target] += 1;
        }
        deg
    }

    /// Recount of the generated graph in the shape of `expected_sizes`.
    pub fn recount(&self) -> ReductionSizes {
        let count =
            |f: &dyn Fn(&Gadget) -> bool| self.blobs.iter().filter(|b| f(&b.gadget)).count() as u64;
        let mut pairs = HashSet::new();
        let mut columns = HashSet::new();
        let mut cells = HashSet::new();
        for e in &self.edges {
            if let Role::VerticalPair {
                column, cell, pair, ..
            } = e.role
            {
                pairs.insert((column, cell, pair));
                columns.insert(column);
                cells.insert((column, cell));
            }
        }
        let floors: HashSet<_> = self
            .gadgets
            .keys()
            .filter(|g| matches!(g, Gadget::Floor { .. }))
            .collect();
        let cols = columns.len().max(1) as u64;
        let path_len = self
            .transversal_paths
            .first()
            .map_or(0, |p| p.len() as u64 - 1);
        let deg = self.degrees();
        ReductionSizes {
            half_bound: self.manifest.half_bound,
            beam_blobs: count(&|g| *g == Gadget::TopBeam),
            wall_blobs: count(&|g| *g == Gadget::LeftWall),
            columns: columns.len() as u64,
            cells_per_column: cells.len() as u64 / cols,
            floors_per_column: floors.len() as u64 / cols,
            noncentral_pairs: self.manifest.noncentral_pairs,
            floor_blobs: count(&|g| matches!(g, Gadget::Floor { .. })),
            total_blobs: self.blobs.len() as u64,
            vertical_pairs: pairs.len() as u64,
            transversal_paths: self.transversal_paths.len() as u64,
            transversal_path_edges: path_len,
            apex_degree: deg[self.apex] as u64,
            vertices: self.vertices.len() as u64,
            edges: self.edges.len() as u64,
        }
    }

    pub fn to_document(&self) -> ReducedGraphDocument {
        let id = |v: usize| self.vertices[v].id.clone();
        ReducedGraphDocument {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexEntry { id: v.id.clone(), role: v.role.to_string() })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeEntry {
                    id: e.id.clone(),
                    source: id(e.source),
                    target: id(e.target),
                    role: e.role.to_string(),
                })
                .collect(),
            manifest: ManifestEntry {
                sizes: self.manifest.clone(),
                conventions: vec![
                    "vertical pairs share attaching vertices zigzag-style: pair j joins (top j, bottom j+1) and (top j+1, bottom j)",
                    "a floor has (pairs above + 1) + (pairs below + 1) inner attaching vertices plus two ends",
                    "each column owns a block of half_bound + 2 consecutive beam attaching vertices after alpha/gamma",
                ],
                rotation_at_a: self.transversal_paths.iter().map(|p| id(p[1])).collect(),
                rotation_at_b: self
                    .transversal_paths
                    .iter()
                    .rev()
                    .map(|p| id(p[p.len() - 2]))
                    .collect(),
            },
        }
    }
}

/// Checks every blob label class independently of the stored `Blob` records:
/// the edges tagged with a blob index must form exactly a K_{3,12}.
pub fn blob_subgraphs_are_k312(g: &ReducedGraph) -> std::result::Result<usize, String> {
    let mut classes: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for e in &g.edges {
        if let Role::BlobEdge { blob } = e.role {
            classes.entry(blob).or_default().push((e.source, e.target));
        }
    }
    for (blob, edges) in &classes {
        let mut deg: HashMap<usize, usize> = HashMap::new();
        let mut seen = HashSet::new();
        for &(s, t) in edges {
            if s == t || !seen.insert((s.min(t), s.max(t))) {
                return Err(format!("blob {blob}: repeated edge or loop"));
            }
            *deg.entry(s).or_default() += 1;
            *deg.entry(t).or_default() += 1;
        }
        let hubs: HashSet<usize> = deg
            .iter()
            .filter(|(_, &d)| d == 12)
            .map(|(&v, _)| v)
            .collect();
        let leaves = deg.iter().filter(|(_, &d)| d == 3).count();
        if edges.len() != 36 || hubs.len() != 3 || leaves != 12 || deg.len() != 15 {
            return Err(format!("blob {blob}: not K_{{3,12}}"));
        }
        if edges
            .iter()
            .any(|(s, t)| hubs.contains(s) == hubs.contains(t))
        {
            return Err(format!(
                "blob {blob}: not bipartite between hubs and leaves"
            ));
        }
    }
    Ok(classes.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedGraphDocument {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
    pub manifest: ManifestEntry,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexEntry {
    pub id: String,
    pub role: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeEntry {
    pub id: String,
    pub source: String,
    pub target: String,
    pub role: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ManifestEntry {
    #[serde(flatten)]
    pub sizes: ReductionSizes,
    pub conventions: Vec<&'static str>,
    pub rotation_at_a: Vec<String>,
    pub rotation_at_b: Vec<String>,
}
