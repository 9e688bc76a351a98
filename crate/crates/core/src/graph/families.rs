use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::GraphError;

/// Upper bound on generated vertex counts.
const MAX_VERTICES: usize = 1 << 16;

/// Resampling budget for connected Erdős–Rényi draws.
pub const ER_MAX_ATTEMPTS: usize = 1000;

/// A named graph family with its parameters.
///
/// The textual form is `name:arg1,arg2,...`, e.g. `johnson:4,2`,
/// `knight:7,7`, `multipartite:1,1,1,4` or `erdos_renyi:20,0.3,7`.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Hypercube(usize),
    /// `n` pairs, `2n` vertices, every vertex adjacent to all but its partner.
    CocktailParty(usize),
    /// `k`-subsets of an `n`-set, adjacent when they share `k - 1` elements.
    Johnson { n: usize, k: usize },
    /// Even-weight bitstrings of length `n`, adjacent at Hamming distance 2.
    Demicube(usize),
    CompleteMultipartite(Vec<usize>),
    KnightBoard { rows: usize, cols: usize },
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

pub const FAMILY_NAMES: &[&str] = &[
    "complete:N",
    "cycle:N",
    "path:N",
    "hypercube:N",
    "cocktail_party:N",
    "johnson:N,K",
    "demicube:N",
    "multipartite:A,B,...",
    "knight:ROWS,COLS",
    "erdos_renyi:N,P,SEED",
];

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::Hypercube(_) => "hypercube",
            FamilySpec::CocktailParty(_) => "cocktail_party",
            FamilySpec::Johnson { .. } => "johnson",
            FamilySpec::Demicube(_) => "demicube",
            FamilySpec::CompleteMultipartite(_) => "multipartite",
            FamilySpec::KnightBoard { .. } => "knight",
            FamilySpec::ErdosRenyi { .. } => "erdos_renyi",
        }
    }

    /// Vertex count of the generated graph (saturating).
    pub fn vertex_count(&self) -> usize {
        let pow2 = |e: usize| 1usize.checked_shl(e as u32).unwrap_or(usize::MAX);
        match *self {
            FamilySpec::Complete(n) | FamilySpec::Cycle(n) | FamilySpec::Path(n) => n,
            FamilySpec::Hypercube(n) => pow2(n),
            FamilySpec::CocktailParty(n) => n.saturating_mul(2),
            FamilySpec::Johnson { n, k } => binomial(n, k),
            FamilySpec::Demicube(n) => pow2(n.saturating_sub(1)),
            FamilySpec::CompleteMultipartite(ref parts) => parts.iter().fold(0usize, |a, &b| a.saturating_add(b)),
            FamilySpec::KnightBoard { rows, cols } => rows.saturating_mul(cols),
            FamilySpec::ErdosRenyi { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::Spec(msg));
        match *self {
            FamilySpec::Complete(n) | FamilySpec::Path(n) if n < 1 => return bad(format!("{} needs n >= 1", self.name())),
            FamilySpec::Cycle(n) if n < 3 => return bad("cycle needs n >= 3".into()),
            FamilySpec::Hypercube(n) if n < 1 => return bad("hypercube needs n >= 1".into()),
            FamilySpec::CocktailParty(n) if n < 2 => return bad("cocktail_party needs n >= 2".into()),
            FamilySpec::Johnson { n, k } if k < 1 || k >= n => return bad("johnson needs 1 <= k <= n-1".into()),
            FamilySpec::Demicube(n) if n < 2 => return bad("demicube needs n >= 2".into()),
            FamilySpec::CompleteMultipartite(ref parts) if parts.is_empty() || parts.contains(&0) => {
                return bad("multipartite needs at least one part, all sizes >= 1".into())
            }
            FamilySpec::KnightBoard { rows, cols } if rows < 1 || cols < 1 => {
                return bad("knight needs rows, cols >= 1".into())
            }
            FamilySpec::ErdosRenyi { n, p, .. } if n < 1 || !(0.0..=1.0).contains(&p) => {
                return bad("erdos_renyi needs n >= 1 and 0 <= p <= 1".into())
            }
            _ => {}
        }
        let count = self.vertex_count();
        if count > MAX_VERTICES {
            return bad(format!("{} vertices exceeds the limit of {}", count, MAX_VERTICES));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.name())?;
        match self {
            FamilySpec::Complete(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Hypercube(n)
            | FamilySpec::CocktailParty(n)
            | FamilySpec::Demicube(n) => write!(f, "{}", n),
            FamilySpec::Johnson { n, k } => write!(f, "{},{}", n, k),
            FamilySpec::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
            FamilySpec::KnightBoard { rows, cols } => write!(f, "{},{}", rows, cols),
            FamilySpec::ErdosRenyi { n, p, seed } => write!(f, "{},{},{}", n, p, seed),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |msg: String| GraphError::Spec(msg);
        let (name, args) = s.trim().split_once(':').ok_or_else(|| err(format!("expected name:args, got {:?}", s)))?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let int = |i: usize| -> Result<usize, GraphError> {
            args.get(i)
                .ok_or_else(|| err(format!("{} is missing argument {}", name, i + 1)))?
                .parse()
                .map_err(|_| err(format!("{}: argument {} is not a nonnegative integer", name, i + 1)))
        };
        let arity = |want: usize| -> Result<(), GraphError> {
            if args.len() == want {
                Ok(())
            } else {
                Err(err(format!("{} takes {} argument(s), got {}", name, want, args.len())))
            }
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "complete" | "k" => {
                arity(1)?;
                FamilySpec::Complete(int(0)?)
            }
            "cycle" | "c" => {
                arity(1)?;
                FamilySpec::Cycle(int(0)?)
            }
            "path" | "p" => {
                arity(1)?;
                FamilySpec::Path(int(0)?)
            }
            "hypercube" | "q" => {
                arity(1)?;
                FamilySpec::Hypercube(int(0)?)
            }
            "cocktail_party" | "cocktail" | "cp" => {
                arity(1)?;
                FamilySpec::CocktailParty(int(0)?)
            }
            "johnson" | "j" => {
                arity(2)?;
                FamilySpec::Johnson { n: int(0)?, k: int(1)? }
            }
            "demicube" => {
                arity(1)?;
                FamilySpec::Demicube(int(0)?)
            }
            "multipartite" | "complete_multipartite" => {
                FamilySpec::CompleteMultipartite((0..args.len()).map(int).collect::<Result<_, _>>()?)
            }
            "knight" | "knight_board" => {
                arity(2)?;
                FamilySpec::KnightBoard { rows: int(0)?, cols: int(1)? }
            }
            "erdos_renyi" | "er" | "gnp" => {
                arity(3)?;
                let p = args[1].parse().map_err(|_| err(format!("{}: p is not a number", name)))?;
                let seed = args[2].parse().map_err(|_| err(format!("{}: seed is not an integer", name)))?;
                FamilySpec::ErdosRenyi { n: int(0)?, p, seed }
            }
            other => {
                return Err(err(format!("unknown family {:?}; known families: {}", other, FAMILY_NAMES.join(" "))))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn bitstring(x: usize, len: usize) -> String {
    (0..len).rev().map(|b| if x >> b & 1 == 1 { '1' } else { '0' }).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.clone());
        // rightmost position that can still advance
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - k + i) else {
            return out;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Builds the graph named by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let graph = match *spec {
        FamilySpec::Complete(n) => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?,
        FamilySpec::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
        FamilySpec::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
        FamilySpec::Hypercube(dim) => {
            let n = 1usize << dim;
            let edges = (0..n).flat_map(|x| (0..dim).map(move |b| (x, x ^ (1 << b)))).filter(|&(x, y)| x < y);
            Graph::from_edges(n, edges)?.with_labels((0..n).map(|x| bitstring(x, dim)).collect())
        }
        FamilySpec::CocktailParty(pairs) => {
            let n = 2 * pairs;
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| u / 2 != v / 2);
            Graph::from_edges(n, edges)?
        }
        FamilySpec::Johnson { n, k } => {
            let sets = subsets(n, k);
            let mut edges = Vec::new();
            for (a, sa) in sets.iter().enumerate() {
                for (b, sb) in sets.iter().enumerate().skip(a + 1) {
                    if sa.iter().filter(|x| sb.contains(x)).count() == k - 1 {
                        edges.push((a, b));
                    }
                }
            }
            let labels = sets
                .iter()
                .map(|s| {
                    let items: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
                    format!("{{{}}}", items.join(","))
                })
                .collect();
            Graph::from_edges(sets.len(), edges)?.with_labels(labels)
        }
        FamilySpec::Demicube(dim) => {
            let words: Vec<usize> = (0..1usize << dim).filter(|x| x.count_ones() % 2 == 0).collect();
            let mut edges = Vec::new();
            for (a, &x) in words.iter().enumerate() {
                for (b, &y) in words.iter().enumerate().skip(a + 1) {
                    if (x ^ y).count_ones() == 2 {
                        edges.push((a, b));
                    }
                }
            }
            let labels = words.iter().map(|&x| bitstring(x, dim)).collect();
            Graph::from_edges(words.len(), edges)?.with_labels(labels)
        }
        FamilySpec::CompleteMultipartite(ref parts) => {
            let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(p, &size)| std::iter::repeat_n(p, size)).collect();
            let n = part_of.len();
            let edges = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| part_of[u] != part_of[v]);
            Graph::from_edges(n, edges)?
        }
        FamilySpec::KnightBoard { rows, cols } => {
            let mut edges = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    for (dr, dc) in [(1i64, 2i64), (2, 1), (2, -1), (1, -2)] {
                        let (r2, c2) = (r as i64 + dr, c as i64 + dc);
                        if r2 < rows as i64 && (0..cols as i64).contains(&c2) {
                            edges.push((r * cols + c, r2 as usize * cols + c2 as usize));
                        }
                    }
                }
            }
            let labels = (0..rows * cols).map(|v| format!("({},{})", v / cols, v % cols)).collect();
            Graph::from_edges(rows * cols, edges)?.with_labels(labels)
        }
        FamilySpec::ErdosRenyi { n, p, seed } => connected_gnp(n, p, seed)?,
    };
    Ok(graph)
}

/// Samples G(n, p) from a seeded generator until the draw is connected.
fn connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ER_MAX_ATTEMPTS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::NoConnectedSample(ER_MAX_ATTEMPTS))
}
