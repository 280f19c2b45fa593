//! Labeled-weighted digraphs of matrix pairs, walks and their configurations,
//! and the double-arc multigraph interpretation of ghost weights.
//!
//! A matrix pair `(A, B)` induces a digraph with an `a`-labeled arc `i -> j`
//! of weight `A[i,j]` for every nonzero entry, and likewise `b`-labeled arcs
//! from `B`. Walk enumeration over these digraphs is the semantic oracle for
//! matrix word evaluation: the `(i,j)` entry of a word evaluated at `(A, B)`
//! is the sum over all `(i,j)`-walks carrying that word as its label.
//!
//! Nodes are 0-based internally; the file formats and reports use 1-based
//! node numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::matrix::Matrix;
use crate::semiring::{Rat, Semiring, SupScalar};
use crate::words::{Letter, Word};

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

/// The arc-multiplicity vector of a walk: a lattice point in `N^(2n^2)`,
/// ordered as all `a`-arc multiplicities (row-major) followed by all `b`-arc
/// multiplicities.
///
/// Two walks with equal configurations consist of the same arcs with the same
/// multiplicities, hence have equal weight and equal length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Config(Vec<u64>);

impl Config {
    pub fn zeros(n: usize) -> Self {
        Config(vec![0; 2 * n * n])
    }

    pub fn from_coords(coords: Vec<u64>) -> Self {
        Config(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Coordinate index of the arc `(from, to)` with the given label.
    pub fn coord_index(n: usize, from: usize, to: usize, label: Letter) -> usize {
        let block = match label {
            Letter::A => 0,
            Letter::B => 1,
        };
        block * n * n + from * n + to
    }

    pub fn bump(&mut self, n: usize, from: usize, to: usize, label: Letter) {
        self.0[Config::coord_index(n, from, to, label)] += 1;
    }

    /// Sums of the `a`-block and the `b`-block.
    pub fn block_sums(&self) -> (u64, u64) {
        let half = self.0.len() / 2;
        (
            self.0[..half].iter().sum(),
            self.0[half..].iter().sum(),
        )
    }

    /// Exact inner product with a rational direction vector.
    pub fn dot(&self, direction: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(direction)
            .map(|(&c, x)| Rat::from_integer(c.into()) * x)
            .sum()
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Walks
// ---------------------------------------------------------------------------

/// A nonempty walk: a start node and a chained sequence of labeled steps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    start: usize,
    steps: Vec<(usize, Letter)>,
}

impl Walk {
    pub fn new(start: usize, steps: Vec<(usize, Letter)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Parse("a walk must have at least one arc".into()));
        }
        Ok(Walk { start, steps })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.steps.last().expect("nonempty").0
    }

    pub fn steps(&self) -> &[(usize, Letter)] {
        &self.steps
    }

    #[allow(clippy::len_without_is_empty)] // walks are nonempty by construction
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// The word spelled by the step labels; its length equals the walk's.
    pub fn label(&self) -> Word {
        Word::new(self.steps.iter().map(|&(_, l)| l).collect()).expect("nonempty")
    }

    /// Arc multiplicities of this walk, as a lattice point.
    pub fn config(&self, n: usize) -> Result<Config> {
        let mut cfg = Config::zeros(n);
        let mut from = self.start;
        for &(to, label) in &self.steps {
            if from >= n || to >= n {
                return Err(Error::NodeOutOfRange {
                    node: from.max(to),
                    n,
                });
            }
            cfg.bump(n, from, to, label);
            from = to;
        }
        Ok(cfg)
    }

    /// Render as `1 -a-> 2 -b-> 1` with 1-based nodes.
    pub fn pretty(&self) -> String {
        let mut out = format!("{}", self.start + 1);
        let mut _cur = self.start;
        for &(to, label) in &self.steps {
            out.push_str(&format!(" -{}-> {}", label, to + 1));
            _cur = to;
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Labeled-weighted digraphs
// ---------------------------------------------------------------------------

/// The labeled-weighted digraph of a matrix pair: at most one arc per
/// `(from, to, label)` triple, each with a nonzero supertropical weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LwDigraph {
    n: usize,
    arcs: BTreeMap<(usize, usize, Letter), SupScalar>,
}

impl LwDigraph {
    pub fn new(n: usize) -> Self {
        LwDigraph {
            n,
            arcs: BTreeMap::new(),
        }
    }

    /// Builds the digraph of a matrix pair; `a`-arcs come from `A`, `b`-arcs
    /// from `B`, one arc per nonzero entry.
    pub fn of_pair(a: &Matrix<SupScalar>, b: &Matrix<SupScalar>) -> Result<Self> {
        if a.n() != b.n() {
            return Err(Error::DimensionMismatch {
                left: a.n(),
                right: b.n(),
            });
        }
        let n = a.n();
        let mut g = LwDigraph::new(n);
        for (matrix, label) in [(a, Letter::A), (b, Letter::B)] {
            for i in 0..n {
                for j in 0..n {
                    let w = matrix.entry(i, j);
                    if !w.is_zero() {
                        g.arcs.insert((i, j, label), w.clone());
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn insert_arc(
        &mut self,
        from: usize,
        to: usize,
        label: Letter,
        weight: SupScalar,
    ) -> Result<()> {
        if from >= self.n || to >= self.n {
            return Err(Error::NodeOutOfRange {
                node: from.max(to),
                n: self.n,
            });
        }
        if weight.is_zero() {
            return Err(Error::Parse(
                "zero arc weights are not representable; omit the arc instead".into(),
            ));
        }
        if self.arcs.insert((from, to, label), weight).is_some() {
            return Err(Error::Parse(format!(
                "duplicate arc {}->{} labeled {}; parallel arcs need the multigraph form",
                from + 1,
                to + 1,
                label
            )));
        }
        Ok(())
    }

    pub fn arc(&self, from: usize, to: usize, label: Letter) -> Option<&SupScalar> {
        self.arcs.get(&(from, to, label))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, Letter, &SupScalar)> {
        self.arcs.iter().map(|(&(f, t, l), w)| (f, t, l, w))
    }

    /// The weight of a walk: the product of its arc weights in order. The
    /// result is a ghost iff some arc weight is a ghost.
    pub fn walk_weight(&self, walk: &Walk) -> Result<SupScalar> {
        let mut acc = SupScalar::one();
        let mut from = walk.start();
        for &(to, label) in walk.steps() {
            let w = self
                .arc(from, to, label)
                .ok_or(Error::MissingArc {
                    from: from + 1,
                    to: to + 1,
                    label: label.as_char(),
                })?;
            acc = acc.mul(w);
            from = to;
        }
        Ok(acc)
    }

    /// Every walk from `from` to `to` whose label is `w`, in depth-first
    /// order with ascending next nodes, each exactly once.
    pub fn enumerate_walks(
        &self,
        w: &Word,
        from: usize,
        to: usize,
        limits: &Limits,
    ) -> Result<Vec<Walk>> {
        if from >= self.n || to >= self.n {
            return Err(Error::NodeOutOfRange {
                node: from.max(to),
                n: self.n,
            });
        }
        let mut visited: u64 = 0;
        let mut walks = Vec::new();
        let mut steps: Vec<(usize, Letter)> = Vec::with_capacity(w.len());
        self.walk_dfs(w.letters(), from, to, from, &mut steps, &mut walks, &mut visited, limits)?;
        Ok(walks)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk_dfs(
        &self,
        rest: &[Letter],
        node: usize,
        target: usize,
        start: usize,
        steps: &mut Vec<(usize, Letter)>,
        walks: &mut Vec<Walk>,
        visited: &mut u64,
        limits: &Limits,
    ) -> Result<()> {
        *visited += 1;
        if *visited > limits.max_walk_prefixes {
            return Err(Error::LimitExceeded(format!(
                "walk enumeration visited more than {} prefixes",
                limits.max_walk_prefixes
            )));
        }
        let Some((&letter, tail)) = rest.split_first() else {
            if node == target {
                walks.push(Walk::new(start, steps.clone()).expect("nonempty"));
            }
            return Ok(());
        };
        for next in 0..self.n {
            if self.arc(node, next, letter).is_some() {
                steps.push((next, letter));
                self.walk_dfs(tail, next, target, start, steps, walks, visited, limits)?;
                steps.pop();
            }
        }
        Ok(())
    }

    /// The supertropical sum of the weights of all `(from, to)`-walks labeled
    /// `w`: zero when no walk exists, a ghost when the maximum is attained by
    /// more than one walk or through a ghost arc. Equals the `(from, to)`
    /// entry of `w` evaluated at the matrix pair behind this digraph.
    pub fn max_walk_value(
        &self,
        w: &Word,
        from: usize,
        to: usize,
        limits: &Limits,
    ) -> Result<SupScalar> {
        let mut acc = SupScalar::Zero;
        for walk in self.enumerate_walks(w, from, to, limits)? {
            let weight = self.walk_weight(&walk)?;
            acc = acc.add(&weight);
        }
        Ok(acc)
    }

    /// Walks attaining the maximum nu-weight, with the summed value.
    pub fn max_walks(
        &self,
        w: &Word,
        from: usize,
        to: usize,
        limits: &Limits,
    ) -> Result<Option<(SupScalar, Vec<Walk>)>> {
        let walks = self.enumerate_walks(w, from, to, limits)?;
        if walks.is_empty() {
            return Ok(None);
        }
        let mut value = SupScalar::Zero;
        let mut weights = Vec::with_capacity(walks.len());
        for walk in &walks {
            let weight = self.walk_weight(walk)?;
            value = value.add(&weight);
            weights.push(weight);
        }
        let top = value.nu();
        let maxed = walks
            .into_iter()
            .zip(weights)
            .filter(|(_, weight)| weight.nu() == top)
            .map(|(walk, _)| walk)
            .collect();
        Ok(Some((value, maxed)))
    }
}

// ---------------------------------------------------------------------------
// Multigraphs with double arcs
// ---------------------------------------------------------------------------

/// A labeled multigraph with real arc weights; parallel arcs are permitted
/// and walk multiplicity counts them as distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    arcs: Vec<MultiArc>,
}

/// One arc of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiArc {
    pub from: usize,
    pub to: usize,
    pub label: Letter,
    pub weight: Rat,
}

impl Multigraph {
    pub fn new(n: usize, arcs: Vec<MultiArc>) -> Result<Self> {
        for arc in &arcs {
            if arc.from >= n || arc.to >= n {
                return Err(Error::NodeOutOfRange {
                    node: arc.from.max(arc.to),
                    n,
                });
            }
        }
        Ok(Multigraph { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[MultiArc] {
        &self.arcs
    }

    /// Maximum walk weight and the exact number of maximum-weight walks from
    /// `from` to every node, for walks labeled `w`. Parallel arcs yield
    /// distinct walks. Computed by per-letter dynamic programming.
    pub fn max_weight_counts(&self, w: &Word, from: usize) -> Vec<Option<(Rat, BigUint)>> {
        let mut state: Vec<Option<(Rat, BigUint)>> = vec![None; self.n];
        state[from] = Some((Rat::from_integer(0.into()), BigUint::from(1u32)));
        for &letter in w.letters() {
            let mut next: Vec<Option<(Rat, BigUint)>> = vec![None; self.n];
            for arc in self.arcs.iter().filter(|arc| arc.label == letter) {
                let Some((weight, count)) = &state[arc.from] else {
                    continue;
                };
                let candidate = weight + &arc.weight;
                match &mut next[arc.to] {
                    slot @ None => *slot = Some((candidate, count.clone())),
                    Some((best, best_count)) => {
                        if candidate > *best {
                            *best = candidate;
                            *best_count = count.clone();
                        } else if candidate == *best {
                            *best_count += count;
                        }
                    }
                }
            }
            state = next;
        }
        state
    }

    /// All walks labeled `w` from `from` to `to`, distinguishing parallel
    /// arcs; used as the enumeration oracle for the dynamic program.
    pub fn enumerate_walks(
        &self,
        w: &Word,
        from: usize,
        to: usize,
        limits: &Limits,
    ) -> Result<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut visited: u64 = 0;
        self.multi_dfs(w.letters(), from, to, &mut stack, &mut out, &mut visited, limits)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn multi_dfs(
        &self,
        rest: &[Letter],
        node: usize,
        target: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        visited: &mut u64,
        limits: &Limits,
    ) -> Result<()> {
        *visited += 1;
        if *visited > limits.max_walk_prefixes {
            return Err(Error::LimitExceeded(format!(
                "multigraph walk enumeration visited more than {} prefixes",
                limits.max_walk_prefixes
            )));
        }
        let Some((&letter, tail)) = rest.split_first() else {
            if node == target {
                out.push(stack.clone());
            }
            return Ok(());
        };
        for (idx, arc) in self.arcs.iter().enumerate() {
            if arc.from == node && arc.label == letter {
                stack.push(idx);
                self.multi_dfs(tail, arc.to, target, stack, out, visited, limits)?;
                stack.pop();
            }
        }
        Ok(())
    }

    /// Weight of an arc-index walk.
    pub fn walk_weight(&self, arc_indices: &[usize]) -> Rat {
        arc_indices
            .iter()
            .map(|&idx| self.arcs[idx].weight.clone())
            .sum()
    }
}

/// Interprets ghost arcs as double arcs: every ghost-weight arc of the
/// digraph becomes two parallel real-weight arcs with the same label and
/// magnitude; real arcs carry over unchanged.
pub fn expand_double(g: &LwDigraph) -> Multigraph {
    let mut arcs = Vec::new();
    for (from, to, label, weight) in g.arcs() {
        let magnitude = weight.magnitude().expect("arc weights are nonzero").clone();
        let copies = if weight.is_ghost() { 2 } else { 1 };
        for _ in 0..copies {
            arcs.push(MultiArc {
                from,
                to,
                label,
                weight: magnitude.clone(),
            });
        }
    }
    Multigraph { n: g.n(), arcs }
}

// ---------------------------------------------------------------------------
// Corollary walk check
// ---------------------------------------------------------------------------

/// Per-entry outcome of the two-word walk comparison on a multigraph.
#[derive(Debug, Clone)]
pub struct WalkComparison {
    pub from: usize,
    pub to: usize,
    pub u_best: Option<(Rat, BigUint)>,
    pub v_best: Option<(Rat, BigUint)>,
}

impl WalkComparison {
    /// The highest `u`-walk weight must equal the highest `v`-walk weight
    /// (both possibly absent).
    pub fn weights_agree(&self) -> bool {
        match (&self.u_best, &self.v_best) {
            (None, None) => true,
            (Some((wu, _)), Some((wv, _))) => wu == wv,
            _ => false,
        }
    }

    /// If exactly one maximum-weight `u`-walk exists, exactly one
    /// maximum-weight `v`-walk must exist.
    pub fn uniqueness_agrees(&self) -> bool {
        let one = BigUint::from(1u32);
        match (&self.u_best, &self.v_best) {
            (Some((_, cu)), Some((_, cv))) if *cu == one => *cv == one,
            _ => true,
        }
    }
}

/// Report of the walk comparison over every node pair.
#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub comparisons: Vec<WalkComparison>,
}

impl CorollaryReport {
    pub fn violations(&self) -> Vec<&WalkComparison> {
        self.comparisons
            .iter()
            .filter(|c| !c.weights_agree() || !c.uniqueness_agrees())
            .collect()
    }
}

/// For every node pair, compares the highest walk weights (and the number of
/// maximum-weight walks, parallel arcs counted) between labels `u` and `v`.
pub fn corollary_walk_check(g: &Multigraph, u: &Word, v: &Word) -> CorollaryReport {
    let mut comparisons = Vec::new();
    for from in 0..g.n() {
        let u_state = g.max_weight_counts(u, from);
        let v_state = g.max_weight_counts(v, from);
        for to in 0..g.n() {
            comparisons.push(WalkComparison {
                from,
                to,
                u_best: u_state[to].clone(),
                v_best: v_state[to].clone(),
            });
        }
    }
    CorollaryReport { comparisons }
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct DigraphFile {
    n: usize,
    #[serde(default, skip_serializing_if = "is_false")]
    multigraph: bool,
    arcs: Vec<ArcRecord>,
}

#[derive(Serialize, Deserialize)]
struct ArcRecord {
    from: usize,
    to: usize,
    label: String,
    weight: String,
}

fn is_false(b: &bool) -> bool {
    !b
}

/// Either flavor of digraph file.
#[derive(Debug, Clone)]
pub enum ParsedDigraph {
    Simple(LwDigraph),
    Multi(Multigraph),
}

fn parse_label(text: &str) -> Result<Letter> {
    match text {
        "a" => Ok(Letter::A),
        "b" => Ok(Letter::B),
        other => Err(Error::Parse(format!("arc label must be \"a\" or \"b\", got `{other}`"))),
    }
}

/// Parses a digraph file: `{"n": ..., "arcs": [...]}` with 1-based nodes,
/// optional `"multigraph": true` for the parallel-arc variant. Multigraph
/// arcs must carry real weights (double arcs already expanded); the simple
/// form allows ghosts and at most one arc per `(from, to, label)`.
pub fn parse_digraph(text: &str) -> Result<ParsedDigraph> {
    let file: DigraphFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("digraph file: {e}")))?;
    if file.n == 0 {
        return Err(Error::Parse("digraph must have at least one node".into()));
    }
    let decode_node = |v: usize| -> Result<usize> {
        if v == 0 || v > file.n {
            Err(Error::NodeOutOfRange { node: v, n: file.n })
        } else {
            Ok(v - 1)
        }
    };
    if file.multigraph {
        let mut arcs = Vec::with_capacity(file.arcs.len());
        for arc in &file.arcs {
            let weight: SupScalar = arc.weight.parse()?;
            let magnitude = match weight {
                SupScalar::Real(r) => r,
                SupScalar::Zero => {
                    return Err(Error::Parse(
                        "zero arc weights are not representable; omit the arc instead".into(),
                    ))
                }
                SupScalar::Ghost(_) => {
                    return Err(Error::Parse(
                        "ghost weights are not allowed in a multigraph; expand them into two \
                         parallel real arcs"
                            .into(),
                    ))
                }
            };
            arcs.push(MultiArc {
                from: decode_node(arc.from)?,
                to: decode_node(arc.to)?,
                label: parse_label(&arc.label)?,
                weight: magnitude,
            });
        }
        Ok(ParsedDigraph::Multi(Multigraph::new(file.n, arcs)?))
    } else {
        let mut g = LwDigraph::new(file.n);
        for arc in &file.arcs {
            g.insert_arc(
                decode_node(arc.from)?,
                decode_node(arc.to)?,
                parse_label(&arc.label)?,
                arc.weight.parse()?,
            )?;
        }
        Ok(ParsedDigraph::Simple(g))
    }
}

/// Renders a simple digraph in the file format (1-based nodes, sorted arcs).
pub fn render_digraph(g: &LwDigraph) -> String {
    let file = DigraphFile {
        n: g.n(),
        multigraph: false,
        arcs: g
            .arcs()
            .map(|(from, to, label, weight)| ArcRecord {
                from: from + 1,
                to: to + 1,
                label: label.to_string(),
                weight: weight.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&file).expect("digraph serialization cannot fail")
}

/// Renders a multigraph in the file format.
pub fn render_multigraph(g: &Multigraph) -> String {
    let file = DigraphFile {
        n: g.n(),
        multigraph: true,
        arcs: g
            .arcs()
            .iter()
            .map(|arc| ArcRecord {
                from: arc.from + 1,
                to: arc.to + 1,
                label: arc.label.to_string(),
                weight: arc.weight.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&file).expect("multigraph serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;
    use crate::semiring::rat_int;

    fn word(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn limits() -> Limits {
        Limits::default()
    }

    /// A 2-node digraph with all 8 arcs present and distinct weights.
    fn complete_two() -> LwDigraph {
        let mut g = LwDigraph::new(2);
        let mut w = 1i64;
        for label in [Letter::A, Letter::B] {
            for from in 0..2 {
                for to in 0..2 {
                    g.insert_arc(from, to, label, SupScalar::real_int(w)).unwrap();
                    w += 1;
                }
            }
        }
        g
    }

    #[test]
    fn digraph_of_pair_skips_zero_entries() {
        let zero = Matrix::<SupScalar>::zero(2);
        let g = LwDigraph::of_pair(&zero, &zero).unwrap();
        assert_eq!(g.arc_count(), 0);

        let mut a = Matrix::<SupScalar>::zero(2);
        a.set_entry(0, 1, SupScalar::ghost_int(1));
        let g = LwDigraph::of_pair(&a, &zero).unwrap();
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.arc(0, 1, Letter::A), Some(&SupScalar::ghost_int(1)));
    }

    #[test]
    fn one_node_pair_gives_two_loops() {
        let a = Matrix::from_rows(1, vec![SupScalar::real_int(2)]).unwrap();
        let b = Matrix::from_rows(1, vec![SupScalar::real_int(5)]).unwrap();
        let g = LwDigraph::of_pair(&a, &b).unwrap();
        assert_eq!(g.arc(0, 0, Letter::A), Some(&SupScalar::real_int(2)));
        assert_eq!(g.arc(0, 0, Letter::B), Some(&SupScalar::real_int(5)));
    }

    #[test]
    fn walk_weight_multiplies_arc_weights() {
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::real_int(2)).unwrap();
        g.insert_arc(1, 0, Letter::B, SupScalar::real_int(3)).unwrap();
        let single = Walk::new(0, vec![(1, Letter::A)]).unwrap();
        assert_eq!(g.walk_weight(&single).unwrap(), SupScalar::real_int(2));
        let double = Walk::new(0, vec![(1, Letter::A), (0, Letter::B)]).unwrap();
        assert_eq!(g.walk_weight(&double).unwrap(), SupScalar::real_int(5));
        let missing = Walk::new(0, vec![(1, Letter::B)]).unwrap();
        assert!(matches!(
            g.walk_weight(&missing),
            Err(Error::MissingArc { .. })
        ));
    }

    #[test]
    fn ghost_arcs_ghost_the_walk_weight() {
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::real_int(2)).unwrap();
        g.insert_arc(1, 0, Letter::B, SupScalar::ghost_int(3)).unwrap();
        let walk = Walk::new(0, vec![(1, Letter::A), (0, Letter::B)]).unwrap();
        assert_eq!(g.walk_weight(&walk).unwrap(), SupScalar::ghost_int(5));
    }

    #[test]
    fn walk_label_spells_the_steps() {
        let walk = Walk::new(0, vec![(1, Letter::A), (0, Letter::B)]).unwrap();
        assert_eq!(walk.label(), word("ab"));
        assert_eq!(Walk::new(0, vec![(0, Letter::B)]).unwrap().label(), word("b"));
        let aaa = Walk::new(0, vec![(0, Letter::A), (0, Letter::A), (0, Letter::A)]).unwrap();
        assert_eq!(aaa.label(), word("aaa"));
        assert_eq!(aaa.label().len(), aaa.len());
    }

    #[test]
    fn config_counts_arc_multiplicities() {
        // Walk 1 -a-> 2 -b-> 1 in 1-based terms.
        let walk = Walk::new(0, vec![(1, Letter::A), (0, Letter::B)]).unwrap();
        let cfg = walk.config(2).unwrap();
        let mut expected = Config::zeros(2);
        expected.bump(2, 0, 1, Letter::A);
        expected.bump(2, 1, 0, Letter::B);
        assert_eq!(cfg, expected);

        let looped = Walk::new(0, vec![(0, Letter::A), (0, Letter::A)]).unwrap();
        let cfg = looped.config(2).unwrap();
        assert_eq!(cfg.coords()[Config::coord_index(2, 0, 0, Letter::A)], 2);

        // Different walks over the same arc multiset share a configuration.
        let x = Walk::new(0, vec![(0, Letter::A), (1, Letter::B), (1, Letter::A), (0, Letter::B)])
            .unwrap();
        let y = Walk::new(0, vec![(1, Letter::B), (1, Letter::A), (0, Letter::B), (0, Letter::A)])
            .unwrap();
        assert_ne!(x, y);
        assert_eq!(x.config(2).unwrap(), y.config(2).unwrap());
    }

    #[test]
    fn config_rejects_out_of_range_nodes() {
        let walk = Walk::new(0, vec![(3, Letter::A)]).unwrap();
        assert!(matches!(
            walk.config(2),
            Err(Error::NodeOutOfRange { node: 3, n: 2 })
        ));
    }

    #[test]
    fn enumerate_complete_two_node_ab_loops() {
        let g = complete_two();
        let walks = g.enumerate_walks(&word("ab"), 0, 0, &limits()).unwrap();
        // Exactly two: through node 1 and through node 2.
        assert_eq!(walks.len(), 2);
        assert_eq!(walks[0], Walk::new(0, vec![(0, Letter::A), (0, Letter::B)]).unwrap());
        assert_eq!(walks[1], Walk::new(0, vec![(1, Letter::A), (0, Letter::B)]).unwrap());
    }

    #[test]
    fn enumerate_no_arcs_is_empty() {
        let g = LwDigraph::new(2);
        assert!(g.enumerate_walks(&word("ab"), 0, 1, &limits()).unwrap().is_empty());
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 0, Letter::A, SupScalar::real_int(1)).unwrap();
        assert!(g.enumerate_walks(&word("a"), 0, 1, &limits()).unwrap().is_empty());
    }

    #[test]
    fn enumeration_counts_complete_digraphs() {
        // On the complete n-node digraph the walks labeled w starting at a
        // fixed node, summed over endpoints, number n^len(w).
        for n in 1..=3usize {
            let mut g = LwDigraph::new(n);
            for label in [Letter::A, Letter::B] {
                for from in 0..n {
                    for to in 0..n {
                        g.insert_arc(from, to, label, SupScalar::real_int(1)).unwrap();
                    }
                }
            }
            for text in ["a", "ab", "aab", "abab", "babab", "aabbab"] {
                let w = word(text);
                let total: usize = (0..n)
                    .map(|to| g.enumerate_walks(&w, 0, to, &limits()).unwrap().len())
                    .sum();
                assert_eq!(total, n.pow(w.len() as u32));
            }
        }
    }

    #[test]
    fn enumeration_limit_is_enforced() {
        let g = complete_two();
        let tight = Limits {
            max_walk_prefixes: 3,
            ..Limits::default()
        };
        assert!(matches!(
            g.enumerate_walks(&word("abab"), 0, 0, &tight),
            Err(Error::LimitExceeded(_))
        ));
    }

    #[test]
    fn max_walk_value_sums_supertropically() {
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 0, Letter::A, SupScalar::real_int(3)).unwrap();
        g.insert_arc(0, 1, Letter::A, SupScalar::real_int(5)).unwrap();
        g.insert_arc(0, 0, Letter::B, SupScalar::real_int(0)).unwrap();
        g.insert_arc(1, 0, Letter::B, SupScalar::real_int(0)).unwrap();
        // Two ab-walks 1->1 of weights 3 and 5.
        assert_eq!(
            g.max_walk_value(&word("ab"), 0, 0, &limits()).unwrap(),
            SupScalar::real_int(5)
        );
        // Make them tie: the value ghosts.
        let mut g2 = LwDigraph::new(2);
        g2.insert_arc(0, 0, Letter::A, SupScalar::real_int(5)).unwrap();
        g2.insert_arc(0, 1, Letter::A, SupScalar::real_int(5)).unwrap();
        g2.insert_arc(0, 0, Letter::B, SupScalar::real_int(0)).unwrap();
        g2.insert_arc(1, 0, Letter::B, SupScalar::real_int(0)).unwrap();
        assert_eq!(
            g2.max_walk_value(&word("ab"), 0, 0, &limits()).unwrap(),
            SupScalar::ghost_int(5)
        );
        // A single ghost walk stays ghost.
        let mut g3 = LwDigraph::new(1);
        g3.insert_arc(0, 0, Letter::A, SupScalar::ghost_int(4)).unwrap();
        assert_eq!(
            g3.max_walk_value(&word("a"), 0, 0, &limits()).unwrap(),
            SupScalar::ghost_int(4)
        );
        // No walk at all: zero.
        assert_eq!(
            g3.max_walk_value(&word("b"), 0, 0, &limits()).unwrap(),
            SupScalar::Zero
        );
    }

    #[test]
    fn equal_configs_equal_weight_and_length() {
        let g = complete_two();
        let walks = g.enumerate_walks(&word("abba"), 0, 1, &limits()).unwrap();
        for x in &walks {
            for y in &walks {
                if x.config(2).unwrap() == y.config(2).unwrap() {
                    assert_eq!(g.walk_weight(x).unwrap(), g.walk_weight(y).unwrap());
                    assert_eq!(x.len(), y.len());
                }
            }
        }
    }

    #[test]
    fn expand_double_doubles_ghost_arcs() {
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::ghost_int(3)).unwrap();
        let m = expand_double(&g);
        assert_eq!(m.arcs().len(), 2);
        assert!(m
            .arcs()
            .iter()
            .all(|arc| arc.weight == rat_int(3) && arc.label == Letter::A));

        // Ghost-free digraphs expand to themselves arc-for-arc.
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::real_int(1)).unwrap();
        g.insert_arc(1, 0, Letter::B, SupScalar::real_int(2)).unwrap();
        assert_eq!(expand_double(&g).arcs().len(), 2);

        assert_eq!(expand_double(&LwDigraph::new(2)).arcs().len(), 0);

        // Mixed: real + 2 * ghost.
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::real_int(1)).unwrap();
        g.insert_arc(1, 0, Letter::A, SupScalar::ghost_int(2)).unwrap();
        g.insert_arc(1, 1, Letter::B, SupScalar::ghost_int(5)).unwrap();
        assert_eq!(expand_double(&g).arcs().len(), 1 + 2 + 2);
    }

    #[test]
    fn multigraph_dp_matches_enumeration() {
        // Parallel arcs with equal weights create genuine multiplicity.
        let g = Multigraph::new(
            2,
            vec![
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
                MultiArc { from: 0, to: 0, label: Letter::A, weight: rat_int(2) },
                MultiArc { from: 1, to: 0, label: Letter::B, weight: rat_int(0) },
                MultiArc { from: 0, to: 0, label: Letter::B, weight: rat_int(-1) },
                MultiArc { from: 1, to: 1, label: Letter::B, weight: rat_int(3) },
            ],
        )
        .unwrap();
        for text in ["a", "ab", "aab", "abab", "aabb"] {
            let w = word(text);
            for from in 0..2 {
                let dp = g.max_weight_counts(&w, from);
                for to in 0..2 {
                    let walks = g.enumerate_walks(&w, from, to, &limits()).unwrap();
                    match &dp[to] {
                        None => assert!(walks.is_empty()),
                        Some((best, count)) => {
                            let best_enum = walks
                                .iter()
                                .map(|walk| g.walk_weight(walk))
                                .max()
                                .unwrap();
                            assert_eq!(*best, best_enum);
                            let at_max = walks
                                .iter()
                                .filter(|walk| g.walk_weight(walk) == best_enum)
                                .count();
                            assert_eq!(*count, BigUint::from(at_max));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corollary_check_trivial_for_equal_words() {
        let g = Multigraph::new(
            2,
            vec![
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
                MultiArc { from: 1, to: 0, label: Letter::B, weight: rat_int(2) },
            ],
        )
        .unwrap();
        let report = corollary_walk_check(&g, &word("ab"), &word("ab"));
        assert!(report.violations().is_empty());
    }

    #[test]
    fn corollary_check_flags_generic_noncommutativity() {
        // On a generic 2-node digraph ab and ba are not interchangeable.
        let g = Multigraph::new(
            2,
            vec![
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
                MultiArc { from: 1, to: 0, label: Letter::B, weight: rat_int(10) },
                MultiArc { from: 0, to: 0, label: Letter::B, weight: rat_int(-5) },
                MultiArc { from: 1, to: 1, label: Letter::A, weight: rat_int(7) },
            ],
        )
        .unwrap();
        let report = corollary_walk_check(&g, &word("ab"), &word("ba"));
        assert!(!report.violations().is_empty());
        // Confirm a concrete violation by enumeration.
        let u_walks = g.enumerate_walks(&word("ab"), 0, 0, &limits()).unwrap();
        let v_walks = g.enumerate_walks(&word("ba"), 0, 0, &limits()).unwrap();
        let u_best = u_walks.iter().map(|w| g.walk_weight(w)).max();
        let v_best = v_walks.iter().map(|w| g.walk_weight(w)).max();
        assert_ne!(u_best, v_best);
    }

    #[test]
    fn digraph_file_round_trip() {
        let mut g = LwDigraph::new(2);
        g.insert_arc(0, 1, Letter::A, SupScalar::ghost(3, 2)).unwrap();
        g.insert_arc(1, 0, Letter::B, SupScalar::real_int(-4)).unwrap();
        let text = render_digraph(&g);
        match parse_digraph(&text).unwrap() {
            ParsedDigraph::Simple(parsed) => {
                assert_eq!(parsed, g);
                assert_eq!(render_digraph(&parsed), text);
            }
            ParsedDigraph::Multi(_) => panic!("expected simple digraph"),
        }
    }

    #[test]
    fn multigraph_file_round_trip_and_validation() {
        let g = Multigraph::new(
            2,
            vec![
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
                MultiArc { from: 0, to: 1, label: Letter::A, weight: rat_int(1) },
            ],
        )
        .unwrap();
        let text = render_multigraph(&g);
        match parse_digraph(&text).unwrap() {
            ParsedDigraph::Multi(parsed) => assert_eq!(parsed, g),
            ParsedDigraph::Simple(_) => panic!("expected multigraph"),
        }

        // Ghost weights are rejected in the multigraph form.
        let bad = r#"{"n":1,"multigraph":true,"arcs":[{"from":1,"to":1,"label":"a","weight":"2v"}]}"#;
        assert!(parse_digraph(bad).is_err());
        // Parallel arcs are rejected in the simple form.
        let bad = r#"{"n":2,"arcs":[
            {"from":1,"to":2,"label":"a","weight":"1"},
            {"from":1,"to":2,"label":"a","weight":"2"}]}"#;
        assert!(parse_digraph(bad).is_err());
        // Node numbers are 1-based.
        let bad = r#"{"n":2,"arcs":[{"from":0,"to":1,"label":"a","weight":"1"}]}"#;
        assert!(parse_digraph(bad).is_err());
    }
}
