//! Simple graphs and the ideal families attached to them.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, Ring, RingRef};

/// Simple undirected graph on `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    bipartite: bool,
    connected: bool,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::Graph(format!("loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::Graph(format!("vertex {v} out of range 1..={n}")));
                }
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::Graph(format!("duplicate edge {{{a},{b}}}")));
            }
        }
        let (bipartite, connected) = classify(n, &set);
        Ok(Graph {
            n,
            edges: set,
            bipartite,
            connected,
        })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges = (1..=n).map(|i| (i, i % n + 1));
        Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }
}

fn classify(n: usize, edges: &BTreeSet<(usize, usize)>) -> (bool, bool) {
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color = vec![None::<bool>; n + 1];
    let mut bipartite = true;
    let mut components = 0;
    for s in 1..=n {
        if color[s].is_some() {
            continue;
        }
        components += 1;
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &w in &adj[v] {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => bipartite = false,
                    _ => {}
                }
            }
        }
    }
    (bipartite, components <= 1)
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for (a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

/// Graph file: first line `n`, then one `i j` edge per line. `#` starts a
/// comment; `/` is accepted as a line separator for one-line input.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .split(['\n', '/'])
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lno, first) = lines
        .next()
        .ok_or_else(|| Error::Graph("empty graph file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Graph(format!("line {lno}: expected vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Graph(format!(
                "line {lno}: expected `i j`, got {line:?}"
            )));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Graph(format!("line {lno}: bad vertex {s:?}")))
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        if a == b {
            return Err(Error::Graph(format!("line {lno}: loop at vertex {a}")));
        }
        edges.push((a, b));
    }
    Graph::new(n, edges)
}

/// `f_ij = x_i y_j - x_j y_i`.
pub fn f_ij(ring: &RingRef, i: usize, j: usize) -> Polynomial {
    &(&ring.xv(i) * &ring.yv(j)) - &(&ring.xv(j) * &ring.yv(i))
}

/// `g_ij = x_i x_j - y_i y_j`.
pub fn g_ij(ring: &RingRef, i: usize, j: usize) -> Polynomial {
    &(&ring.xv(i) * &ring.xv(j)) - &(&ring.yv(i) * &ring.yv(j))
}

/// `x_i y_j + x_j y_i`, the permanent of columns `i, j`.
pub fn perm_ij(ring: &RingRef, i: usize, j: usize) -> Polynomial {
    &(&ring.xv(i) * &ring.yv(j)) + &(&ring.xv(j) * &ring.yv(i))
}

fn edge_ideal(g: &Graph, field: Field, gen: fn(&RingRef, usize, usize) -> Polynomial) -> Ideal {
    let ring = Ring::graph(g.n(), field);
    let gens = g.edges().map(|(i, j)| gen(&ring, i, j)).collect();
    Ideal::new(&ring, gens).unwrap()
}

/// Parity binomial edge ideal `(x_i x_j - y_i y_j : {i,j} ∈ E)`.
pub fn parity_ideal(g: &Graph, field: Field) -> Ideal {
    edge_ideal(g, field, g_ij)
}

/// Permanental edge ideal `(x_i y_j + x_j y_i : {i,j} ∈ E)`.
pub fn permanental_ideal(g: &Graph, field: Field) -> Ideal {
    edge_ideal(g, field, perm_ij)
}

/// Set when the permanental and determinantal ideals coincide.
pub fn permanental_warning(field: Field) -> Option<&'static str> {
    (field.characteristic() == 2).then_some("permanental = determinantal in characteristic 2")
}

/// Binomial (determinantal) edge ideal `(f_ij : {i,j} ∈ E)`.
pub fn determinantal_ideal(g: &Graph, field: Field) -> Ideal {
    edge_ideal(g, field, f_ij)
}

/// Generators of the saturation `I_G : (prod x_i y_i)^∞` for a connected
/// non-bipartite graph: `x_i^2 - y_i^2` and all `f_ij`, `g_ij`.
pub fn saturation_generators(g: &Graph, field: Field) -> Result<Ideal> {
    if !g.is_connected() {
        return Err(Error::Hypothesis(
            "saturation generators need a connected graph".into(),
        ));
    }
    if g.is_bipartite() {
        return Err(Error::Hypothesis(
            "saturation generators need a non-bipartite graph".into(),
        ));
    }
    let n = g.n();
    let ring = Ring::graph(n, field);
    let mut gens: Vec<Polynomial> = (1..=n)
        .map(|i| &ring.xv(i).pow(2) - &ring.yv(i).pow(2))
        .collect();
    for i in 1..=n {
        for j in i + 1..=n {
            gens.push(f_ij(&ring, i, j));
            gens.push(g_ij(&ring, i, j));
        }
    }
    Ideal::new(&ring, gens)
}

/// Named ideals of the complete-graph decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// `P_ij = (g_ij) + m_{[n] \ {i,j}}`
    Prime(usize, usize),
    /// `p+ = (x_i + y_i : i ∈ [n])`
    PPlus,
    /// `p- = (x_i - y_i : i ∈ [n])`
    PMinus,
    /// `m_I = (x_i, y_i : i ∈ I)`
    Maximal(Vec<usize>),
}

pub fn component_primes(n: usize, which: &Component, field: Field) -> Result<Ideal> {
    let ring = Ring::graph(n, field);
    let gens = match which {
        Component::Prime(i, j) => {
            if !(1 <= *i && i < j && *j <= n) {
                return Err(Error::OutOfRange(format!(
                    "P_{{{i},{j}}} needs 1 <= i < j <= {n}"
                )));
            }
            let mut gens = vec![g_ij(&ring, *i, *j)];
            for k in (1..=n).filter(|k| k != i && k != j) {
                gens.push(ring.xv(k));
                gens.push(ring.yv(k));
            }
            gens
        }
        Component::PPlus => (1..=n).map(|i| &ring.xv(i) + &ring.yv(i)).collect(),
        Component::PMinus => (1..=n).map(|i| &ring.xv(i) - &ring.yv(i)).collect(),
        Component::Maximal(set) => {
            let mut gens = Vec::new();
            for &i in set {
                if i == 0 || i > n {
                    return Err(Error::OutOfRange(format!("vertex {i} not in 1..={n}")));
                }
                gens.push(ring.xv(i));
                gens.push(ring.yv(i));
            }
            gens
        }
    };
    Ideal::new(&ring, gens)
}

/// `I_k = I_{K_n} + (f_1n, ..., f_kn)` for `0 <= k <= n - 1`.
pub fn chain_ideal(n: usize, k: usize, field: Field) -> Result<Ideal> {
    if n < 2 || k >= n {
        return Err(Error::OutOfRange(format!(
            "chain ideal I_{k} needs 0 <= k <= n-1 = {}",
            n.saturating_sub(1)
        )));
    }
    let base = parity_ideal(&Graph::complete(n), field);
    let ring = base.ring().clone();
    let mut gens = base.generators().to_vec();
    gens.extend((1..=k).map(|t| f_ij(&ring, t, n)));
    Ideal::new(&ring, gens)
}

/// `J = (x_n + y_n) + I_{n-2}`.
pub fn section_ideal(n: usize, field: Field) -> Result<Ideal> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "the section ideal needs n >= 3, got {n}"
        )));
    }
    let chain = chain_ideal(n, n - 2, field)?;
    let ring = chain.ring().clone();
    let mut gens = vec![&ring.xv(n) + &ring.yv(n)];
    gens.extend(chain.generators().iter().cloned());
    Ideal::new(&ring, gens)
}

/// Explicit generators of `p- ∩ P_{n-1,n}`: `g_{n-1,n}` together with
/// `x_i - y_i`, `(x_{n-1} - y_{n-1}) y_i` and `(x_n - y_n) y_i` for `i <= n-2`.
pub fn minus_meet_generators(n: usize, field: Field) -> Result<Ideal> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("needs n >= 3, got {n}")));
    }
    let r = Ring::graph(n, field);
    let (a, b) = (n - 1, n);
    let mut gens = vec![g_ij(&r, a, b)];
    for i in 1..=n - 2 {
        gens.push(&r.xv(i) - &r.yv(i));
        gens.push(&(&r.xv(a) - &r.yv(a)) * &r.yv(i));
        gens.push(&(&r.xv(b) - &r.yv(b)) * &r.yv(i));
    }
    Ideal::new(&r, gens)
}

/// `I_{K_m}` for `m < n`, with generators written in the ring of `K_n`.
pub fn complete_parity_in(n: usize, m: usize, field: Field) -> Result<Ideal> {
    if m > n {
        return Err(Error::OutOfRange(format!(
            "K_{m} does not fit in {n} vertices"
        )));
    }
    let r = Ring::graph(n, field);
    let mut gens = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            gens.push(g_ij(&r, i, j));
        }
    }
    Ideal::new(&r, gens)
}

/// Tag for the command-line `--kind` selector and for reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealFamily {
    Parity,
    Permanental,
    Determinantal,
    Saturation,
    Component(Component),
    Chain(usize),
}

impl std::str::FromStr for IdealFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdealFamily> {
        match s {
            "parity" => Ok(IdealFamily::Parity),
            "permanental" => Ok(IdealFamily::Permanental),
            "determinantal" => Ok(IdealFamily::Determinantal),
            "saturation" => Ok(IdealFamily::Saturation),
            "pplus" => Ok(IdealFamily::Component(Component::PPlus)),
            "pminus" => Ok(IdealFamily::Component(Component::PMinus)),
            other => {
                let bad = || Error::Usage(format!("unknown ideal kind {other:?}"));
                if let Some(rest) = other.strip_prefix("chain:") {
                    return rest.parse().map(IdealFamily::Chain).map_err(|_| bad());
                }
                if let Some(rest) = other.strip_prefix("prime:") {
                    let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                    let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
                    return Ok(IdealFamily::Component(Component::Prime(a, b)));
                }
                Err(bad())
            }
        }
    }
}

/// Builds a family member for a graph. Chain and component ideals are
/// defined for complete graphs only and use `g.n()`.
pub fn build_family(g: &Graph, family: &IdealFamily, field: Field) -> Result<Ideal> {
    match family {
        IdealFamily::Parity => Ok(parity_ideal(g, field)),
        IdealFamily::Permanental => Ok(permanental_ideal(g, field)),
        IdealFamily::Determinantal => Ok(determinantal_ideal(g, field)),
        IdealFamily::Saturation => saturation_generators(g, field),
        IdealFamily::Component(c) => component_primes(g.n(), c, field),
        IdealFamily::Chain(k) => {
            if !g.is_complete() {
                return Err(Error::Hypothesis(
                    "chain ideals are defined for complete graphs".into(),
                ));
            }
            chain_ideal(g.n(), *k, field)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph_files() {
        let k3 = parse_graph("3 / 1 2 / 1 3 / 2 3").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let c4 = parse_graph("# square\n4\n1 2\n2 3\n3 4 # last but one\n4 1\n").unwrap();
        assert!(c4.is_bipartite());
        assert!(c4.is_connected());
        assert!(matches!(parse_graph("2 / 1 1"), Err(Error::Graph(m)) if m.contains("loop")));
        assert!(
            matches!(parse_graph("2 / 1 3"), Err(Error::Graph(m)) if m.contains("out of range"))
        );
        assert!(
            matches!(parse_graph("3 / 1 2 / 2 1"), Err(Error::Graph(m)) if m.contains("duplicate"))
        );
        assert!(parse_graph("3 / 1 2 3").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn classification() {
        assert!(!Graph::complete(3).is_bipartite());
        assert!(Graph::cycle(6).is_bipartite());
        assert!(!Graph::cycle(5).is_bipartite());
        assert!(!Graph::new(4, [(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn parity_and_permanental_generators() {
        let q = Field::Rationals;
        let i = parity_ideal(&Graph::complete(3), q);
        let r = i.ring().clone();
        let expect: Vec<Polynomial> = ["x1*x2 - y1*y2", "x1*x3 - y1*y3", "x2*x3 - y2*y3"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        assert_eq!(i.generators(), expect.as_slice());

        let single = parity_ideal(&Graph::new(2, [(1, 2)]).unwrap(), q);
        assert_eq!(single.generators()[0].to_string(), "x1*x2 - y1*y2");
        assert!(parity_ideal(&Graph::new(3, []).unwrap(), q).is_zero());

        let perm = permanental_ideal(&Graph::new(2, [(1, 2)]).unwrap(), q);
        assert_eq!(
            perm.generators()[0],
            perm.ring().parse("x1*y2 + x2*y1").unwrap()
        );
        assert!(permanental_warning(q).is_none());
        assert!(permanental_warning(Field::prime(2).unwrap()).is_some());
    }

    #[test]
    fn saturation_generator_counts() {
        let q = Field::Rationals;
        assert_eq!(
            saturation_generators(&Graph::complete(3), q)
                .unwrap()
                .generators()
                .len(),
            9
        );
        assert_eq!(
            saturation_generators(&Graph::complete(4), q)
                .unwrap()
                .generators()
                .len(),
            16
        );
        assert!(matches!(
            saturation_generators(&Graph::cycle(4), q),
            Err(Error::Hypothesis(m)) if m.contains("bipartite")
        ));
        let disconnected = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(saturation_generators(&disconnected, q).is_err());
    }

    #[test]
    fn component_ideals() {
        let q = Field::Rationals;
        let p12 = component_primes(3, &Component::Prime(1, 2), q).unwrap();
        let r = p12.ring().clone();
        let expect: Vec<Polynomial> = ["x1*x2 - y1*y2", "x3", "y3"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        assert_eq!(p12.generators(), expect.as_slice());
        let pp = component_primes(3, &Component::PPlus, q).unwrap();
        assert_eq!(pp.generators()[2].to_string(), "x3 + y3");
        let m = component_primes(3, &Component::Maximal(vec![1, 2]), q).unwrap();
        assert_eq!(m.generators().len(), 4);
        assert!(component_primes(3, &Component::Prime(2, 4), q).is_err());
        assert!(component_primes(3, &Component::Prime(2, 2), q).is_err());
        assert!(component_primes(3, &Component::Maximal(vec![0]), q).is_err());
    }

    #[test]
    fn chain_ideals() {
        let q = Field::Rationals;
        let i0 = chain_ideal(3, 0, q).unwrap();
        assert_eq!(
            i0.generators(),
            parity_ideal(&Graph::complete(3), q).generators()
        );
        let i1 = chain_ideal(3, 1, q).unwrap();
        assert_eq!(i1.generators().len(), 4);
        assert_eq!(i1.generators()[3], f_ij(i1.ring(), 1, 3));
        assert!(chain_ideal(3, 3, q).is_err());
    }

    #[test]
    fn family_tags() {
        assert_eq!(
            "chain:2".parse::<IdealFamily>().unwrap(),
            IdealFamily::Chain(2)
        );
        assert_eq!(
            "prime:1,3".parse::<IdealFamily>().unwrap(),
            IdealFamily::Component(Component::Prime(1, 3))
        );
        assert!("bogus".parse::<IdealFamily>().is_err());
    }
}
