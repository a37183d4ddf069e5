//! Named graph families, including every equality-witness family the bound
//! catalogue refers to.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameters(msg.into())
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::empty(n)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,m}` with centre 0.
pub fn star(m: usize) -> Result<Graph, GraphError> {
    if m == 0 {
        return Err(invalid("star needs at least one leaf"));
    }
    Graph::new(m + 1, (1..=m).map(|leaf| (0, leaf)))
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(invalid(format!("complete bipartite needs non-empty parts, got ({a}, {b})")));
    }
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Perfect matching `(order/2) K_2`.
pub fn matching(order: usize) -> Result<Graph, GraphError> {
    if order == 0 || order % 2 == 1 {
        return Err(invalid(format!("matching needs a positive even order, got {order}")));
    }
    Graph::new(order, (0..order / 2).map(|k| (2 * k, 2 * k + 1)))
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    a.disjoint_union(b)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}

/// Circulant graph: `i ~ j` iff `(j - i) mod n` or `(i - j) mod n` lies in
/// the connection set.
pub fn circulant(n: usize, connections: &[usize]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let mut edges = Vec::new();
    for &s in connections {
        if s == 0 || s >= n {
            return Err(invalid(format!("circulant offset {s} must lie in 1..{n}")));
        }
        for i in 0..n {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::new(n, edges)
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley graph on `q` vertices, `q` prime with `q = 1 (mod 4)`.
pub fn paley(q: usize) -> Result<Graph, GraphError> {
    if !is_prime(q) || q % 4 != 1 {
        return Err(invalid(format!("paley needs a prime q = 1 mod 4, got {q}")));
    }
    let squares: BTreeSet<usize> = (1..q).map(|x| x * x % q).collect();
    let residues: Vec<usize> = squares.into_iter().collect();
    circulant(q, &residues)
}

// Complement of the folded 5-cube: 4-bit labels adjacent at Hamming
// distance 2 or 3. Row v is the neighbour bitmask of v.
const CLEBSCH_COMPLEMENT: [u16; 16] = [
    0x7ee8, 0xbdd4, 0xdbb2, 0xe771, 0xe78e, 0xdb4d, 0xbd2b, 0x7e17, 0xe87e, 0xd4bd, 0xb2db, 0x71e7, 0x8ee7, 0x4ddb,
    0x2bbd, 0x177e,
];

/// The strongly regular graph with parameters (16, 10, 6, 6). The fixed
/// table is checked for symmetry and strong regularity on every load.
pub fn clebsch_complement() -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for (i, &row) in CLEBSCH_COMPLEMENT.iter().enumerate() {
        for (j, &col) in CLEBSCH_COMPLEMENT.iter().enumerate() {
            let forward = row >> j & 1 == 1;
            let backward = col >> i & 1 == 1;
            if forward != backward {
                return Err(invalid("clebsch table is not symmetric"));
            }
            if forward && i < j {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::new(16, edges)?;
    match g.strongly_regular_parameters() {
        Some((16, 10, 6, 6)) => Ok(g),
        other => Err(invalid(format!("clebsch table self-check failed: {other:?}"))),
    }
}

/// Erdős–Rényi `G(n, p)`. Pairs are visited in graph6 order, one uniform
/// draw each, from a ChaCha8 stream seeded with `seed`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    random_gnp_stream(n, p, seed, 0)
}

/// `G(n, p)` drawn from stream `stream` of the generator seeded with `seed`,
/// so independent samples can be produced in any order.
pub fn random_gnp_stream(n: usize, p: f64, seed: u64, stream: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// Textual family specification, as accepted on the command line:
///
/// ```text
/// complete:5  empty:4  path:3  cycle:5  star:3  complete_bipartite:2,3
/// matching:6  circulant:8,1,2  paley:13  clebsch_complement  gnp:10,0.5,7
/// complement:<family>   <family>+<family>   (disjoint union)
/// ```
pub fn from_spec(spec: &str) -> Result<Graph, GraphError> {
    let spec = spec.trim();
    if let Some(inner) = spec.strip_prefix("complement:") {
        return Ok(from_spec(inner)?.complement());
    }
    if spec.contains('+') {
        let mut parts = spec.split('+');
        let first = from_spec(parts.next().unwrap())?;
        return parts.try_fold(first, |acc, part| Ok(acc.disjoint_union(&from_spec(part)?)));
    }

    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let ints = || -> Result<Vec<usize>, GraphError> {
        args.split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse().map_err(|_| invalid(format!("bad integer {s:?} in {spec:?}"))))
            .collect()
    };
    let one = || -> Result<usize, GraphError> {
        match ints()?.as_slice() {
            [x] => Ok(*x),
            _ => Err(invalid(format!("{name} takes exactly one integer parameter"))),
        }
    };
    match name {
        "complete" | "K" => complete(one()?),
        "empty" => empty(one()?),
        "path" | "P" => path(one()?),
        "cycle" | "C" => cycle(one()?),
        "star" => star(one()?),
        "complete_bipartite" | "bipartite" => match ints()?.as_slice() {
            [a, b] => complete_bipartite(*a, *b),
            _ => Err(invalid("complete_bipartite takes two parameters a,b")),
        },
        "matching" => matching(one()?),
        "circulant" => match ints()?.split_first() {
            Some((n, set)) => circulant(*n, set),
            None => Err(invalid("circulant takes n followed by offsets")),
        },
        "paley" => paley(one()?),
        "clebsch_complement" => clebsch_complement(),
        "gnp" => {
            let fields: Vec<&str> = args.split(',').map(str::trim).collect();
            match fields.as_slice() {
                [n, p, seed] => {
                    let n = n.parse().map_err(|_| invalid(format!("bad order {n:?}")))?;
                    let p = p.parse().map_err(|_| invalid(format!("bad probability {p:?}")))?;
                    let seed = seed.parse().map_err(|_| invalid(format!("bad seed {seed:?}")))?;
                    random_gnp(n, p, seed)
                }
                _ => Err(invalid("gnp takes n,p,seed")),
            }
        }
        other => Err(invalid(format!("unknown family {other:?}"))),
    }
}
